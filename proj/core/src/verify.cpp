#include "cstarmod/verify.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "cstarmod/errors.hpp"
#include "cstarmod/json_io.hpp"
#include "cstarmod/random_gen.hpp"

namespace cstarmod {

namespace {

constexpr std::uint64_t kTrialStride = 0x9E3779B97F4A7C15ULL;
constexpr double kDetectTol = 1e-6; // a corrupted input must miss by at least this

void check_config(const TrialConfig& cfg) {
    if (cfg.dims.empty()) throw Error("verify: dims must be nonempty");
    if (!(cfg.tol > 0.0)) throw Error("verify: tol must be positive");
}

struct Accumulator {
    ConditionReport rep;

    explicit Accumulator(std::string condition) { rep.condition = std::move(condition); }

    template <typename WitnessFn>
    void record(std::size_t trial, double residual, bool ok, WitnessFn&& witness_fn) {
        ++rep.trials;
        if (residual > rep.worst_residual) rep.worst_residual = residual;
        if (!ok) {
            if (rep.witness.empty()) {
                rep.witness = "{\"trial\":" + std::to_string(trial) +
                              ",\"input\":" + witness_fn() + "}";
            }
            ++rep.failures;
        }
    }
};

double projection_defect(const ModuleMap& p) {
    const Seminorm full = Seminorm::full(p.algebra());
    return std::max(op_seminorm(full, compose(p, p) - p),
                    op_seminorm(full, adjoint_op(p) - p));
}

// The seed stream for trial k is independent of every other trial, so the
// trials could be evaluated in any order (results are merged by index; we
// run them serially).
Rng trial_rng(const TrialConfig& cfg, std::size_t trial) {
    return Rng(cfg.seed + kTrialStride * (static_cast<std::uint64_t>(trial) + 1));
}

std::size_t sample_rank(Rng& rng, std::size_t max_rank) {
    const std::size_t bound = std::max<std::size_t>(1, max_rank);
    return 1 + rng.index(bound);
}

} // namespace

std::size_t TheoremReport::total_failures() const {
    std::size_t total = 0;
    for (const auto& c : conditions) total += c.failures;
    return total;
}

TheoremReport verify_theorem(const TrialConfig& cfg) {
    return verify_theorem(cfg, VerifyHooks{});
}

TheoremReport verify_theorem(const TrialConfig& cfg, const VerifyHooks& hooks) {
    check_config(cfg);
    TheoremReport report;
    if (cfg.trials == 0) return report;

    Accumulator submodule_summand("submodule-orthogonal-summand");
    Accumulator biorthogonal("biorthogonal-complement");
    Accumulator adjointability("adjointability");
    Accumulator kernel_summand("kernel-summand");
    Accumulator range_summand("range-summand");
    Accumulator polar("polar-decomposition");
    Accumulator generalized_inverse("generalized-inverse");
    Accumulator topological("topological-summand");

    const BlockAlgebra alg(cfg.dims);
    const Seminorm full = Seminorm::full(alg);

    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        Rng rng = trial_rng(cfg, trial);
        const std::size_t n = sample_rank(rng, cfg.max_rank);
        const std::size_t m = sample_rank(rng, cfg.max_rank);
        const FreeModule dom(alg, n);
        const FreeModule cod(alg, m);
        const ModuleMap t = random_map(rng, dom, cod);
        const Submodule f = random_submodule(rng, dom, n + 1);

        const auto map_witness = [&] { return serialize_map(t); };
        const auto sub_witness = [&] { return serialize_submodule(f); };

        // Every finitely generated submodule is the range of an orthogonal
        // projection fixing its generators.
        {
            const ModuleMap p = submodule_projector(f);
            double res = projection_defect(p);
            for (const ModVector& g : f.generators())
                res = std::max(res, vec_seminorm(full, apply_op(p, g) - g));
            submodule_summand.record(trial, res, res <= cfg.tol, sub_witness);
        }

        // F agrees with its double orthogonal complement.
        {
            const double res = biorth_residual(f);
            biorthogonal.record(trial, res, res <= cfg.tol, sub_witness);
        }

        // ⟨Tx, y⟩ = ⟨x, T*y⟩, and the raw realization of T is recognized as a
        // module map and reproduces T bit-for-bit.
        {
            const ModVector x = random_vector(rng, dom);
            const ModVector y = random_vector(rng, cod);
            const AlgElem defect =
                inner(apply_op(t, x), y) - inner(x, apply_op(adjoint_op(t), y));
            const double res = alg_seminorm(full, defect);
            const auto rec = module_map_recognize(raw_from_map(t));
            const bool recognized = std::holds_alternative<ModuleMap>(rec) &&
                                    map_equal(std::get<ModuleMap>(rec), t);
            adjointability.record(trial, res, res <= cfg.tol && recognized, map_witness);
        }

        const KernelRange kr = kernel_range_projectors(t);

        // Ker(T) is an orthogonal summand: p_ker is a projection and T kills it.
        {
            const double res = std::max(projection_defect(kr.p_ker),
                                        op_seminorm(full, compose(t, kr.p_ker)));
            kernel_summand.record(trial, res, res <= cfg.tol, map_witness);
        }

        // Ran(T) is an orthogonal summand: p_ran is a projection fixing T.
        {
            const double res = std::max(projection_defect(kr.p_ran),
                                        op_seminorm(full, compose(kr.p_ran, t) - t));
            range_summand.record(trial, res, res <= cfg.tol, map_witness);
        }

        // T = V|T| with V a partial isometry, V*V the support of |T| and VV*
        // the range projector of T.
        {
            const PolarParts pp = polar_op(t);
            double res = op_seminorm(full, t - compose(pp.v, pp.abs));
            const ModuleMap vv = compose(adjoint_op(pp.v), pp.v);
            res = std::max(res,
                           op_seminorm(full, compose(pp.v, vv) - pp.v));
            const KernelRange kabs = kernel_range_projectors(pp.abs);
            res = std::max(res, op_seminorm(full, vv - kabs.p_ran));
            res = std::max(res,
                           op_seminorm(full, compose(pp.v, adjoint_op(pp.v)) - kr.p_ran));
            polar.record(trial, res, res <= cfg.tol, map_witness);
        }

        // The four Penrose identities for T†.
        {
            const ModuleMap s = hooks.pinv_override ? hooks.pinv_override(t) : pinv_op(t);
            const auto pr = penrose_residuals(t, s);
            const double res = *std::max_element(pr.begin(), pr.end());
            generalized_inverse.record(trial, res, res <= cfg.tol, map_witness);
        }

        // Topological complementability: an idempotent onto the submodule. In
        // this model the orthogonal projector witnesses it, so only the
        // idempotent/fixing half is checked here.
        {
            const ModuleMap q = submodule_projector(f);
            double res = op_seminorm(full, compose(q, q) - q);
            for (const ModVector& g : f.generators())
                res = std::max(res, vec_seminorm(full, apply_op(q, g) - g));
            topological.record(trial, res, res <= cfg.tol, sub_witness);
        }
    }

    report.conditions = {submodule_summand.rep, biorthogonal.rep,   adjointability.rep,
                         kernel_summand.rep,    range_summand.rep,  polar.rep,
                         generalized_inverse.rep, topological.rep};
    return report;
}

TheoremReport lemma_suite(const TrialConfig& cfg) {
    check_config(cfg);
    TheoremReport report;
    if (cfg.trials == 0) return report;

    Accumulator idem_loc("idempotent-localization");
    Accumulator compl_loc("complement-localization");
    Accumulator ranproj_loc("range-projector-localization");
    Accumulator graph_u("graph-unitary");
    Accumulator adj_loc("adjoint-localization");
    Accumulator graph_sum("graph-summand");
    Accumulator bounded("bounded-below");
    Accumulator gen_inv("generalized-inverse");
    Accumulator elem_inv("element-inverse");
    Accumulator inv_loc("inverse-localization");

    const BlockAlgebra alg(cfg.dims);
    const Seminorm full = Seminorm::full(alg);
    const std::vector<Seminorm> supports = seminorm_family(alg, cfg.seed);

    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        Rng rng = trial_rng(cfg, trial);
        const std::size_t n = sample_rank(rng, cfg.max_rank);
        const std::size_t m = sample_rank(rng, cfg.max_rank);
        const FreeModule dom(alg, n);
        const FreeModule cod(alg, m);
        const ModuleMap t = random_map(rng, dom, cod);
        const Submodule f = random_submodule(rng, dom, n + 1);
        const AlgElem a = random_element(rng, alg);

        const auto map_witness = [&] { return serialize_map(t); };
        const auto sub_witness = [&] { return serialize_submodule(f); };
        const auto elem_witness = [&] { return serialize_element(a); };

        const KernelRange kr = kernel_range_projectors(t);

        // An endomorphism is idempotent iff every localization is; the
        // perturbation branch breaks one block and requires the global
        // predicate to notice.
        {
            const ModuleMap& p = kr.p_ran;
            double res = 0.0;
            for (const Seminorm& sp : supports) {
                const LocalizedOp lp = localize_op(sp, p);
                const Seminorm lf = Seminorm::full(lp.map.algebra());
                res = std::max(res, op_seminorm(lf, compose(lp.map, lp.map) - lp.map));
            }
            ModuleMap c = p;
            c.entry(0, 0).block(0)(0, 0) += Complex(0.6, 0.0);
            const bool detected =
                op_seminorm(full, compose(c, c) - c) > kDetectTol;
            idem_loc.record(trial, res, res <= cfg.tol && detected, map_witness);
        }

        // Complements localize:o⊥ of the localized submodule equals the
        // localized o⊥, and P + P⊥ = 1 with P·P⊥ = 0.
        {
            const ModuleMap pf = submodule_projector(f);
            const ModuleMap cf = orth_complement(f);
            double res = op_seminorm(full, (pf + cf) - ModuleMap::identity(dom));
            res = std::max(res, op_seminorm(full, compose(cf, pf)));
            for (const Seminorm& sp : supports) {
                const LocalizedOp lc = localize_op(sp, cf);
                const ModuleMap direct = orth_complement(submodule_localize(sp, f));
                const Seminorm lf = Seminorm::full(lc.map.algebra());
                res = std::max(res, op_seminorm(lf, lc.map - direct));
            }
            compl_loc.record(trial, res, res <= cfg.tol, sub_witness);
        }

        // Range projectors localize; a corrupted candidate must fail either
        // the projection predicate or the range-fixing identity globally.
        {
            const ModuleMap rp = range_projector(t);
            double res = 0.0;
            for (const Seminorm& sp : supports) {
                const LocalizedOp lr = localize_op(sp, rp);
                const ModuleMap direct = range_projector(localize_op(sp, t).map);
                const Seminorm lf = Seminorm::full(lr.map.algebra());
                res = std::max(res, op_seminorm(lf, lr.map - direct));
            }
            ModuleMap c = rp;
            c.entry(0, 0).block(0)(0, 0) += Complex(0.6, 0.0);
            const bool detected =
                projection_defect(c) > kDetectTol ||
                op_seminorm(full, compose(c, t) - t) > kDetectTol;
            ranproj_loc.record(trial, res, res <= cfg.tol && detected, map_witness);
        }

        // The localized graph and the graph of the localization are unitarily
        // identified: u*u and uu* match the advertised projectors.
        {
            double res = 0.0;
            for (const Seminorm& sp : supports) {
                const GraphUnitary gu = graph_unitary(t, sp);
                const Seminorm lf = Seminorm::full(gu.u.map.algebra());
                const ModuleMap ini = compose(adjoint_op(gu.u.map), gu.u.map);
                const ModuleMap fin = compose(gu.u.map, adjoint_op(gu.u.map));
                res = std::max(res, op_seminorm(lf, ini - gu.initial));
                res = std::max(res, op_seminorm(lf, fin - gu.final));
            }
            graph_u.record(trial, res, res <= cfg.tol, map_witness);
        }

        // Adjoints localize (blockwise, hence bit-exactly).
        {
            double res = 0.0;
            for (const Seminorm& sp : supports) {
                const ModuleMap lhs = localize_op(sp, adjoint_op(t)).map;
                const ModuleMap rhs = adjoint_op(localize_op(sp, t).map);
                res = std::max(res, op_seminorm(Seminorm::full(lhs.algebra()), lhs - rhs));
            }
            adj_loc.record(trial, res, res <= cfg.tol, map_witness);
        }

        // The graph of T is an orthogonal summand of domain ⊕ codomain: its
        // projector fixes (x, Tx) and kills (-T*y, y).
        {
            const ModuleMap gp = graph_projector(t);
            double res = projection_defect(gp);
            const ModVector x = random_vector(rng, dom);
            const ModVector z = pair_vec(x, apply_op(t, x));
            res = std::max(res, vec_seminorm(full, apply_op(gp, z) - z));
            const ModVector y = random_vector(rng, cod);
            const ModVector w =
                pair_vec(Complex(-1.0, 0.0) * apply_op(adjoint_op(t), y), y);
            res = std::max(res, vec_seminorm(full, apply_op(gp, w)));
            graph_sum.record(trial, res, res <= cfg.tol, map_witness);
        }

        // p̄(Tx) ≥ c_p·p̄(x) on Ker(T)^⊥ for the computed constant c_p.
        {
            const ModuleMap onto_coker = compose(pinv_op(t), t);
            double res = 0.0;
            for (const Seminorm& sp : supports) {
                const BoundedBelow bb = bounded_below_constant(t, sp);
                if (bb.degenerate) continue;
                for (int r = 0; r < 50; ++r) {
                    const ModVector x = apply_op(onto_coker, random_vector(rng, dom));
                    const double violation =
                        bb.value * vec_seminorm(sp, x) - vec_seminorm(sp, apply_op(t, x));
                    res = std::max(res, std::max(0.0, violation));
                }
            }
            bounded.record(trial, res, res <= cfg.tol, map_witness);
        }

        // Penrose identities again at lemma level, plus detection of a
        // corrupted candidate inverse.
        {
            const ModuleMap s = pinv_op(t);
            const auto pr = penrose_residuals(t, s);
            const double res = *std::max_element(pr.begin(), pr.end());
            ModuleMap bad = s;
            bad.entry(0, 0).block(0)(0, 0) += Complex(0.6, 0.0);
            const auto prbad = penrose_residuals(t, bad);
            const bool detected = *std::max_element(prbad.begin(), prbad.end()) > kDetectTol;
            gen_inv.record(trial, res, res <= cfg.tol && detected, map_witness);
        }

        // Algebra elements have Penrose inverses, and a·a† is the projector
        // onto the principal ideal's range.
        {
            const AlgElem b = elem_pinv(a);
            const AlgElem ab = a * b;
            const AlgElem ba = b * a;
            double res = alg_seminorm(full, a * b * a - a);
            res = std::max(res, alg_seminorm(full, b * a * b - b));
            res = std::max(res, alg_seminorm(full, star(ab) - ab));
            res = std::max(res, alg_seminorm(full, star(ba) - ba));
            res = std::max(res, alg_seminorm(full, ab * ab - ab));
            elem_inv.record(trial, res, res <= cfg.tol, elem_witness);
        }

        // Generalized inverses localize, for elements and for maps.
        {
            double res = 0.0;
            for (const Seminorm& sp : supports) {
                const AlgElem le = alg_localize(sp, elem_pinv(a)) - elem_pinv(alg_localize(sp, a));
                res = std::max(res, alg_max_abs(le));
                const LocalizedOp lt = localize_op(sp, t);
                const ModuleMap lhs = localize_op(sp, pinv_op(t)).map;
                const ModuleMap rhs = pinv_op(lt.map);
                res = std::max(res, op_seminorm(Seminorm::full(lt.map.algebra()), lhs - rhs));
            }
            inv_loc.record(trial, res, res <= cfg.tol, map_witness);
        }
    }

    report.conditions = {idem_loc.rep, compl_loc.rep, ranproj_loc.rep, graph_u.rep,
                         adj_loc.rep,  graph_sum.rep, bounded.rep,     gen_inv.rep,
                         elem_inv.rep, inv_loc.rep};
    return report;
}

std::string serialize_report(const TheoremReport& report) {
    std::string out;
    for (const auto& c : report.conditions) {
        out += "{\"condition\":\"" + c.condition + "\"";
        out += ",\"trials\":" + std::to_string(c.trials);
        out += ",\"failures\":" + std::to_string(c.failures);
        out += ",\"worst_residual\":" + format_double(c.worst_residual);
        out += ",\"witness\":" + (c.witness.empty() ? std::string("null") : c.witness);
        out += "}\n";
    }
    return out;
}

} // namespace cstarmod
