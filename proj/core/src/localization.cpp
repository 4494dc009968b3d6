#include "cstarmod/localization.hpp"

#include <algorithm>

#include "cstarmod/random_gen.hpp"

namespace cstarmod {

LocalizedOp localize_op(const Seminorm& p, const ModuleMap& t) {
    if (p.algebra() != t.algebra()) {
        throw AlgebraMismatch("localize_op: seminorm over a different algebra");
    }
    const FreeModule dom = localized_module(p, t.domain());
    const FreeModule cod = localized_module(p, t.codomain());
    ModuleMap out(dom, cod);
    for (std::size_t i = 0; i < cod.rank(); ++i) {
        for (std::size_t j = 0; j < dom.rank(); ++j) {
            out.entry(i, j) = alg_localize(p, t.entry(i, j));
        }
    }
    return LocalizedOp{p, std::move(out)};
}

LocalizedOp connect_op(const Seminorm& p, const Seminorm& q, const LocalizedOp& tp) {
    if (!(tp.seminorm == p)) {
        throw NotComparable("connect_op: operand is not localized at the source seminorm");
    }
    const FreeModule dom(localized_algebra(q), tp.map.domain().rank());
    const FreeModule cod(localized_algebra(q), tp.map.codomain().rank());
    ModuleMap out(dom, cod);
    for (std::size_t i = 0; i < cod.rank(); ++i) {
        for (std::size_t j = 0; j < dom.rank(); ++j) {
            out.entry(i, j) = alg_connect(p, q, tp.map.entry(i, j));
        }
    }
    return LocalizedOp{q, std::move(out)};
}

std::vector<Seminorm> seminorm_family(const BlockAlgebra& algebra, std::uint64_t seed) {
    const std::size_t k = algebra.block_count();
    std::vector<Seminorm> out;
    if (k <= 4) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            std::vector<std::size_t> support;
            for (std::size_t b = 0; b < k; ++b) {
                if (mask & (std::size_t{1} << b)) support.push_back(b);
            }
            out.emplace_back(algebra, std::move(support));
        }
        return out;
    }
    out.push_back(Seminorm::full(algebra));
    for (std::size_t b = 0; b < k; ++b) out.emplace_back(algebra, std::vector<std::size_t>{b});
    Rng rng(seed);
    for (int draw = 0; draw < 8; ++draw) {
        std::vector<std::size_t> support;
        for (std::size_t b = 0; b < k; ++b) {
            if (rng.uniform() < 0.5) support.push_back(b);
        }
        Seminorm candidate(algebra, std::move(support));
        if (std::find(out.begin(), out.end(), candidate) == out.end()) {
            out.push_back(std::move(candidate));
        }
    }
    return out;
}

GraphUnitary graph_unitary(const ModuleMap& t, const Seminorm& p) {
    const ModuleMap p_loc = localize_op(p, graph_projector(t)).map;
    const ModuleMap q = graph_projector(localize_op(p, t).map);
    ModuleMap u = compose(q, p_loc);
    GraphUnitary out;
    out.initial = compose(adjoint_op(u), u);
    out.final = compose(u, adjoint_op(u));
    out.u = LocalizedOp{p, std::move(u)};
    return out;
}

namespace {

double map_distance(const Seminorm& full, const ModuleMap& a, const ModuleMap& b) {
    return op_seminorm(full, a - b);
}

double projection_defect(const ModuleMap& candidate) {
    const Seminorm full = Seminorm::full(candidate.algebra());
    return std::max(op_seminorm(full, compose(candidate, candidate) - candidate),
                    op_seminorm(full, adjoint_op(candidate) - candidate));
}

} // namespace

CommutationReport commutation_suite(const ModuleMap& t, const std::vector<Seminorm>& seminorms,
                                    std::size_t trials, std::uint64_t seed) {
    constexpr double kLawTol = 1e-9;
    CommutationReport report;
    Rng rng(seed);

    for (std::size_t trial = 0; trial < trials; ++trial) {
        const ModuleMap subject =
            trial == 0 ? t : random_map(rng, t.domain(), t.codomain());
        const ModuleMap subject_adj = adjoint_op(subject);
        const ModuleMap subject_pinv = pinv_op(subject);
        const PolarParts subject_polar = polar_op(subject);
        const ModuleMap subject_ran = compose(subject, subject_pinv);

        for (const Seminorm& p : seminorms) {
            const ModuleMap local = localize_op(p, subject).map;
            const Seminorm local_full = Seminorm::full(local.algebra());
            auto push = [&](const char* law, double residual) {
                report.entries.push_back(
                    LawCheck{law, p.support(), residual, residual <= kLawTol});
                report.worst_residual = std::max(report.worst_residual, residual);
            };

            push("adjoint",
                 map_distance(local_full, localize_op(p, subject_adj).map, adjoint_op(local)));
            push("pseudoinverse",
                 map_distance(local_full, localize_op(p, subject_pinv).map, pinv_op(local)));
            const PolarParts local_polar = polar_op(local);
            push("polar",
                 std::max(map_distance(local_full, localize_op(p, subject_polar.v).map,
                                       local_polar.v),
                          map_distance(local_full, localize_op(p, subject_polar.abs).map,
                                       local_polar.abs)));
            push("projection-transfer", projection_defect(localize_op(p, subject_ran).map));
            push("range-projector",
                 map_distance(local_full, localize_op(p, subject_ran).map,
                              compose(local, pinv_op(local))));
        }

        // Reverse direction of the predicate-transfer biconditional: breaking
        // a single block of a true projection must break the global predicate.
        if (subject.algebra().block_count() > 0 && subject.codomain().rank() > 0) {
            ModuleMap corrupted = subject_ran;
            CMatrix& block = corrupted.entry(0, 0).block(0);
            block(0, 0) += Complex(0.7, 0.0);
            const double defect = projection_defect(corrupted);
            report.entries.push_back(LawCheck{"projection-transfer-falsification",
                                              Seminorm::full(subject.algebra()).support(),
                                              defect, defect > 1e-6});
        }
    }

    report.all_pass = std::all_of(report.entries.begin(), report.entries.end(),
                                  [](const LawCheck& c) { return c.pass; });
    return report;
}

} // namespace cstarmod
