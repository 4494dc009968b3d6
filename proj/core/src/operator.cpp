#include "cstarmod/operator.hpp"

#include <algorithm>
#include <utility>

#include "cstarmod/linalg.hpp"

namespace cstarmod {

ModuleMap::ModuleMap(FreeModule domain, FreeModule codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
    if (domain_.algebra() != codomain_.algebra()) {
        throw AlgebraMismatch("ModuleMap: domain and codomain over different algebras");
    }
    entries_.assign(domain_.rank() * codomain_.rank(), AlgElem(domain_.algebra()));
}

ModuleMap::ModuleMap(FreeModule domain, FreeModule codomain, std::vector<AlgElem> entries)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), entries_(std::move(entries)) {
    if (domain_.algebra() != codomain_.algebra()) {
        throw AlgebraMismatch("ModuleMap: domain and codomain over different algebras");
    }
    if (entries_.size() != domain_.rank() * codomain_.rank()) {
        throw ShapeMismatch("ModuleMap: entry count does not match the ranks");
    }
    for (const AlgElem& e : entries_) {
        if (e.algebra() != domain_.algebra()) {
            throw AlgebraMismatch("ModuleMap: entry over a different algebra");
        }
    }
}

const AlgElem& ModuleMap::entry(std::size_t i, std::size_t j) const {
    return entries_.at(i * domain_.rank() + j);
}

AlgElem& ModuleMap::entry(std::size_t i, std::size_t j) {
    return entries_.at(i * domain_.rank() + j);
}

ModuleMap ModuleMap::identity(const FreeModule& e) {
    ModuleMap t(e, e);
    for (std::size_t i = 0; i < e.rank(); ++i) {
        t.entry(i, i) = AlgElem::identity(e.algebra());
    }
    return t;
}

namespace {

void require_same_shape(const ModuleMap& s, const ModuleMap& t, const char* who) {
    if (s.domain() != t.domain() || s.codomain() != t.codomain()) throw ShapeMismatch(who);
}

Seminorm full_support(const ModuleMap& t) { return Seminorm::full(t.algebra()); }

// Applies fn to every raw block of t and carves the results back into a map
// with the given shape.
template <typename Fn>
ModuleMap blockwise_map(const ModuleMap& t, const FreeModule& domain,
                        const FreeModule& codomain, Fn&& fn) {
    std::vector<CMatrix> blocks;
    const std::size_t k = t.algebra().block_count();
    blocks.reserve(k);
    for (std::size_t b = 0; b < k; ++b) blocks.push_back(fn(block_matrix(t, b)));
    return map_from_blocks(domain, codomain, blocks);
}

CMatrix column_space_projector(const CMatrix& w) {
    return w * mat_pinv(w);
}

// Range projector of a matrix already known to be (numerically) an orthogonal
// projector. Its eigenvalues cluster at 0 and 1, so thresholding at 1/2 is the
// one rank decision that stays correct even when the whole matrix is rounding
// noise — a relative singular-value cut can't classify that case.
CMatrix near_projector_range(const CMatrix& p) {
    const std::size_t n = p.rows();
    const EigResult eig = hermitian_eig(p, -1.0);
    CMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (eig.eigenvalues[k] <= 0.5) continue;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += eig.u(i, k) * std::conj(eig.u(j, k));
            }
        }
    }
    return out;
}

} // namespace

ModuleMap operator+(const ModuleMap& s, const ModuleMap& t) {
    require_same_shape(s, t, "ModuleMap +: shapes differ");
    ModuleMap out(s.domain(), s.codomain());
    for (std::size_t i = 0; i < s.codomain().rank(); ++i) {
        for (std::size_t j = 0; j < s.domain().rank(); ++j) {
            out.entry(i, j) = s.entry(i, j) + t.entry(i, j);
        }
    }
    return out;
}

ModuleMap operator-(const ModuleMap& s, const ModuleMap& t) {
    require_same_shape(s, t, "ModuleMap -: shapes differ");
    ModuleMap out(s.domain(), s.codomain());
    for (std::size_t i = 0; i < s.codomain().rank(); ++i) {
        for (std::size_t j = 0; j < s.domain().rank(); ++j) {
            out.entry(i, j) = s.entry(i, j) - t.entry(i, j);
        }
    }
    return out;
}

ModuleMap operator*(const Complex& c, const ModuleMap& t) {
    ModuleMap out(t.domain(), t.codomain());
    for (std::size_t i = 0; i < t.codomain().rank(); ++i) {
        for (std::size_t j = 0; j < t.domain().rank(); ++j) {
            out.entry(i, j) = c * t.entry(i, j);
        }
    }
    return out;
}

ModuleMap compose(const ModuleMap& s, const ModuleMap& t) {
    if (s.domain() != t.codomain()) {
        throw ShapeMismatch("compose: inner modules do not match");
    }
    std::vector<CMatrix> blocks;
    const std::size_t k = t.algebra().block_count();
    blocks.reserve(k);
    for (std::size_t b = 0; b < k; ++b) {
        blocks.push_back(block_matrix(s, b) * block_matrix(t, b));
    }
    return map_from_blocks(t.domain(), s.codomain(), blocks);
}

bool map_equal(const ModuleMap& s, const ModuleMap& t) {
    if (s.domain() != t.domain() || s.codomain() != t.codomain()) return false;
    for (std::size_t i = 0; i < s.codomain().rank(); ++i) {
        for (std::size_t j = 0; j < s.domain().rank(); ++j) {
            if (!alg_equal(s.entry(i, j), t.entry(i, j))) return false;
        }
    }
    return true;
}

double map_max_abs(const ModuleMap& t) {
    double m = 0.0;
    for (std::size_t i = 0; i < t.codomain().rank(); ++i) {
        for (std::size_t j = 0; j < t.domain().rank(); ++j) {
            m = std::max(m, alg_max_abs(t.entry(i, j)));
        }
    }
    return m;
}

ModVector apply_op(const ModuleMap& t, const ModVector& x) {
    if (x.module() != t.domain()) throw ModuleMismatch("apply_op: vector not in the domain");
    ModVector out(t.codomain());
    for (std::size_t i = 0; i < t.codomain().rank(); ++i) {
        AlgElem acc(t.algebra());
        for (std::size_t j = 0; j < t.domain().rank(); ++j) {
            acc = acc + t.entry(i, j) * x.coord(j);
        }
        out.coord(i) = acc;
    }
    return out;
}

ModuleMap adjoint_op(const ModuleMap& t) {
    ModuleMap out(t.codomain(), t.domain());
    for (std::size_t i = 0; i < t.codomain().rank(); ++i) {
        for (std::size_t j = 0; j < t.domain().rank(); ++j) {
            out.entry(j, i) = star(t.entry(i, j));
        }
    }
    return out;
}

CMatrix block_matrix(const ModuleMap& t, std::size_t b) {
    const std::size_t nb = t.algebra().dim(b);
    const std::size_t n = t.domain().rank();
    const std::size_t m = t.codomain().rank();
    CMatrix out(m * nb, n * nb);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            set_block(out, i * nb, j * nb, t.entry(i, j).block(b));
        }
    }
    return out;
}

ModuleMap map_from_blocks(const FreeModule& domain, const FreeModule& codomain,
                          const std::vector<CMatrix>& blocks) {
    const BlockAlgebra& alg = domain.algebra();
    if (blocks.size() != alg.block_count()) {
        throw ShapeMismatch("map_from_blocks: block count does not match the algebra");
    }
    const std::size_t n = domain.rank();
    const std::size_t m = codomain.rank();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].rows() != m * alg.dim(b) || blocks[b].cols() != n * alg.dim(b)) {
            throw ShapeMismatch("map_from_blocks: raw block has the wrong shape");
        }
    }
    ModuleMap out(domain, codomain);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<CMatrix> tiles;
            tiles.reserve(blocks.size());
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                const std::size_t nb = alg.dim(b);
                tiles.push_back(get_block(blocks[b], i * nb, j * nb, nb, nb));
            }
            out.entry(i, j) = AlgElem(alg, std::move(tiles));
        }
    }
    return out;
}

double op_seminorm(const Seminorm& p, const ModuleMap& t) {
    if (p.algebra() != t.algebra()) {
        throw AlgebraMismatch("op_seminorm: seminorm over a different algebra");
    }
    double value = 0.0;
    for (std::size_t b : p.support()) value = std::max(value, op_norm(block_matrix(t, b)));
    return value;
}

double bound_constant(const Seminorm& p, const ModuleMap& t) {
    return op_seminorm(p, t);
}

RawLinearMap::RawLinearMap(BlockAlgebra algebra, std::size_t domain_rank,
                           std::size_t codomain_rank, std::vector<CMatrix> blocks)
    : algebra_(std::move(algebra)),
      domain_rank_(domain_rank),
      codomain_rank_(codomain_rank),
      blocks_(std::move(blocks)) {
    if (blocks_.size() != algebra_.block_count()) {
        throw ShapeMismatch("RawLinearMap: block count does not match the algebra");
    }
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const std::size_t nb = algebra_.dim(b);
        if (blocks_[b].rows() != codomain_rank_ * nb * nb ||
            blocks_[b].cols() != domain_rank_ * nb * nb) {
            throw ShapeMismatch("RawLinearMap: raw block has the wrong shape");
        }
    }
}

RawLinearMap raw_from_map(const ModuleMap& t) {
    const BlockAlgebra& alg = t.algebra();
    std::vector<CMatrix> blocks;
    blocks.reserve(alg.block_count());
    for (std::size_t b = 0; b < alg.block_count(); ++b) {
        const std::size_t nb = alg.dim(b);
        const CMatrix l = block_matrix(t, b);
        // I_{n_b} ⊗ L: one copy of L per column of the stacked realization.
        CMatrix r(t.codomain().rank() * nb * nb, t.domain().rank() * nb * nb);
        for (std::size_t c = 0; c < nb; ++c) {
            set_block(r, c * l.rows(), c * l.cols(), l);
        }
        blocks.push_back(std::move(r));
    }
    return RawLinearMap(alg, t.domain().rank(), t.codomain().rank(), std::move(blocks));
}

CMatrix raw_apply_block(const RawLinearMap& r, std::size_t b, const CMatrix& x) {
    const std::size_t nb = r.algebra().dim(b);
    if (x.rows() != r.domain_rank() * nb || x.cols() != nb) {
        throw ShapeMismatch("raw_apply_block: stacked realization has the wrong shape");
    }
    // Column-major vectorization, apply, un-vectorize.
    const std::size_t p = x.rows();
    CMatrix vec(p * nb, 1);
    for (std::size_t c = 0; c < nb; ++c) {
        for (std::size_t row = 0; row < p; ++row) vec(c * p + row, 0) = x(row, c);
    }
    const CMatrix image = r.block(b) * vec;
    const std::size_t q = r.codomain_rank() * nb;
    CMatrix out(q, nb);
    for (std::size_t c = 0; c < nb; ++c) {
        for (std::size_t row = 0; row < q; ++row) out(row, c) = image(c * q + row, 0);
    }
    return out;
}

namespace {

// The action of right multiplication by the matrix unit e_{uv} on the
// column-major vectorization of stacked realizations of height h: the
// Kronecker factor (e_{uv})ᵀ ⊗ I_h.
CMatrix unit_right_action(std::size_t h, std::size_t nb, std::size_t u, std::size_t v) {
    CMatrix d(h * nb, h * nb);
    for (std::size_t row = 0; row < h; ++row) {
        d(v * h + row, u * h + row) = Complex(1.0, 0.0);
    }
    return d;
}

} // namespace

std::variant<ModuleMap, ModuleMapRejection> module_map_recognize(const RawLinearMap& r,
                                                                 double tol) {
    const BlockAlgebra& alg = r.algebra();
    const std::size_t n = r.domain_rank();
    const std::size_t m = r.codomain_rank();
    std::vector<CMatrix> tiles;
    tiles.reserve(alg.block_count());
    for (std::size_t b = 0; b < alg.block_count(); ++b) {
        const std::size_t nb = alg.dim(b);
        const CMatrix& raw = r.block(b);
        for (std::size_t u = 0; u < nb; ++u) {
            for (std::size_t v = 0; v < nb; ++v) {
                const CMatrix d = unit_right_action(n * nb, nb, u, v);
                const CMatrix c = unit_right_action(m * nb, nb, u, v);
                const double residual = op_norm(raw * d - c * raw);
                if (residual > tol) {
                    return ModuleMapRejection{b, u, v, residual};
                }
            }
        }
        tiles.push_back(get_block(raw, 0, 0, m * nb, n * nb));
    }
    return map_from_blocks(FreeModule(alg, n), FreeModule(alg, m), tiles);
}

ModuleMap pinv_op(const ModuleMap& t) {
    return blockwise_map(t, t.codomain(), t.domain(),
                         [](const CMatrix& l) { return mat_pinv(l); });
}

std::array<double, 4> penrose_residuals(const ModuleMap& t, const ModuleMap& s) {
    if (s.domain() != t.codomain() || s.codomain() != t.domain()) {
        throw ShapeMismatch("penrose_residuals: candidate has the wrong shape");
    }
    const Seminorm full = full_support(t);
    const ModuleMap ts = compose(t, s);
    const ModuleMap st = compose(s, t);
    return {
        op_seminorm(full, compose(ts, t) - t),
        op_seminorm(full, compose(st, s) - s),
        op_seminorm(full, adjoint_op(ts) - ts),
        op_seminorm(full, adjoint_op(st) - st),
    };
}

PolarParts polar_op(const ModuleMap& t) {
    const std::size_t k = t.algebra().block_count();
    std::vector<CMatrix> abs_blocks;
    std::vector<CMatrix> v_blocks;
    abs_blocks.reserve(k);
    v_blocks.reserve(k);
    for (std::size_t b = 0; b < k; ++b) {
        const CMatrix l = block_matrix(t, b);
        CMatrix root = psd_sqrt(adjoint(l) * l);
        v_blocks.push_back(l * mat_pinv(root));
        abs_blocks.push_back(std::move(root));
    }
    PolarParts parts;
    parts.abs = map_from_blocks(t.domain(), t.domain(), abs_blocks);
    parts.v = map_from_blocks(t.domain(), t.codomain(), v_blocks);
    return parts;
}

ModuleMap graph_projector(const ModuleMap& t) {
    const FreeModule sum = direct_sum(t.domain(), t.codomain());
    const std::size_t k = t.algebra().block_count();
    std::vector<CMatrix> blocks;
    blocks.reserve(k);
    for (std::size_t b = 0; b < k; ++b) {
        const CMatrix l = block_matrix(t, b);
        const CMatrix w = vstack(CMatrix::identity(l.cols()), l);
        blocks.push_back(column_space_projector(w));
    }
    return map_from_blocks(sum, sum, blocks);
}

KernelRange kernel_range_projectors(const ModuleMap& t) {
    const ModuleMap pinv = pinv_op(t);
    KernelRange out;
    out.p_ker = ModuleMap::identity(t.domain()) - compose(pinv, t);
    out.p_ran = compose(t, pinv);
    return out;
}

BoundedBelow bounded_below_constant(const ModuleMap& t, const Seminorm& p) {
    if (p.algebra() != t.algebra()) {
        throw AlgebraMismatch("bounded_below_constant: seminorm over a different algebra");
    }
    BoundedBelow out;
    bool found = false;
    double best = 0.0;
    for (std::size_t b : p.support()) {
        const CMatrix l = block_matrix(t, b);
        const SvdResult s = svd(l);
        const std::size_t rank = numerical_rank(s.sigma, l.rows(), l.cols());
        if (rank == 0) continue; // vanishing block: vectors there lie in the kernel
        const double smallest = s.sigma[rank - 1];
        best = found ? std::min(best, smallest) : smallest;
        found = true;
    }
    out.value = found ? best : 0.0;
    out.degenerate = !found;
    return out;
}

bool is_unitary(const ModuleMap& t, double tol) {
    if (tol < 0.0) tol = 1e-9 * (1.0 + op_seminorm(full_support(t), t));
    const ModuleMap tstar = adjoint_op(t);
    const double left = op_seminorm(Seminorm::full(t.algebra()),
                                    compose(tstar, t) - ModuleMap::identity(t.domain()));
    const double right = op_seminorm(Seminorm::full(t.algebra()),
                                     compose(t, tstar) - ModuleMap::identity(t.codomain()));
    return left <= tol && right <= tol;
}

bool is_partial_isometry(const ModuleMap& t, double tol) {
    if (tol < 0.0) tol = 1e-9 * (1.0 + op_seminorm(full_support(t), t));
    const ModuleMap tstar = adjoint_op(t);
    return op_seminorm(full_support(t), compose(t, compose(tstar, t)) - t) <= tol;
}

OpPredicates op_predicates(const ModuleMap& t, double tol) {
    if (t.domain() != t.codomain()) {
        throw ShapeMismatch("op_predicates: not an endomorphism");
    }
    if (tol < 0.0) tol = 1e-9 * (1.0 + op_seminorm(full_support(t), t));
    const Seminorm full = full_support(t);
    OpPredicates flags;
    flags.selfadjoint = op_seminorm(full, adjoint_op(t) - t) <= tol;
    flags.idempotent = op_seminorm(full, compose(t, t) - t) <= tol;
    flags.projection = flags.selfadjoint && flags.idempotent;
    flags.unitary = is_unitary(t, tol);
    flags.partial_isometry = is_partial_isometry(t, tol);
    flags.positive = flags.selfadjoint;
    if (flags.positive) {
        for (std::size_t b = 0; b < t.algebra().block_count() && flags.positive; ++b) {
            const CMatrix l = block_matrix(t, b);
            if (hermitian_defect(l) > tol) {
                flags.positive = false;
                break;
            }
            const EigResult eig = hermitian_eig(l, tol);
            if (!eig.eigenvalues.empty() && eig.eigenvalues.back() < -tol) {
                flags.positive = false;
            }
        }
    }
    return flags;
}

ModuleMap range_projector(const ModuleMap& t) {
    return blockwise_map(t, t.codomain(), t.codomain(),
                         [](const CMatrix& l) { return column_space_projector(l); });
}

ModuleMap submodule_projector(const Submodule& f) {
    const FreeModule& e = f.module();
    const BlockAlgebra& alg = e.algebra();
    const std::size_t n = e.rank();
    const std::size_t r = f.generators().size();
    std::vector<CMatrix> blocks;
    blocks.reserve(alg.block_count());
    for (std::size_t b = 0; b < alg.block_count(); ++b) {
        const std::size_t nb = alg.dim(b);
        // Concatenated stacked realizations of the generators: the submodule
        // at this block is everything whose columns lie in their column space.
        CMatrix w(n * nb, r * nb);
        for (std::size_t j = 0; j < r; ++j) {
            const ModVector& g = f.generators()[j];
            for (std::size_t i = 0; i < n; ++i) {
                set_block(w, i * nb, j * nb, g.coord(i).block(b));
            }
        }
        blocks.push_back(column_space_projector(w));
    }
    return map_from_blocks(e, e, blocks);
}

ModuleMap orth_complement(const Submodule& f) {
    return ModuleMap::identity(f.module()) - submodule_projector(f);
}

double biorth_residual(const Submodule& f) {
    const ModuleMap p = submodule_projector(f);
    const ModuleMap complement = ModuleMap::identity(f.module()) - p;
    // The complement is itself a projector, so its range is read off
    // spectrally; the generic column-space route would mistake the rounding
    // noise left in I−P for genuine directions whenever F is (nearly) full.
    const ModuleMap ran_complement = blockwise_map(
        complement, f.module(), f.module(),
        [](const CMatrix& c) { return near_projector_range(c); });
    const ModuleMap biorth = ModuleMap::identity(f.module()) - ran_complement;
    return op_seminorm(Seminorm::full(f.module().algebra()), biorth - p);
}

bool biorth_check(const Submodule& f, double tol) {
    return biorth_residual(f) <= tol;
}

} // namespace cstarmod
