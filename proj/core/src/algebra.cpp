#include "cstarmod/algebra.hpp"

#include <algorithm>

#include "cstarmod/linalg.hpp"

namespace cstarmod {

BlockAlgebra::BlockAlgebra(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    for (std::size_t n : dims_) {
        if (n == 0) throw DimensionMismatch("BlockAlgebra: block dimension must be >= 1");
    }
}

AlgElem::AlgElem(BlockAlgebra algebra) : algebra_(std::move(algebra)) {
    blocks_.reserve(algebra_.block_count());
    for (std::size_t i = 0; i < algebra_.block_count(); ++i) {
        blocks_.emplace_back(algebra_.dim(i), algebra_.dim(i));
    }
}

AlgElem::AlgElem(BlockAlgebra algebra, std::vector<CMatrix> blocks)
    : algebra_(std::move(algebra)), blocks_(std::move(blocks)) {
    if (blocks_.size() != algebra_.block_count()) {
        throw AlgebraMismatch("AlgElem: block count does not match the algebra");
    }
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].rows() != algebra_.dim(i) || blocks_[i].cols() != algebra_.dim(i)) {
            throw AlgebraMismatch("AlgElem: block shape does not match the algebra");
        }
    }
}

AlgElem AlgElem::identity(const BlockAlgebra& algebra) {
    std::vector<CMatrix> blocks;
    blocks.reserve(algebra.block_count());
    for (std::size_t i = 0; i < algebra.block_count(); ++i) {
        blocks.push_back(CMatrix::identity(algebra.dim(i)));
    }
    return AlgElem(algebra, std::move(blocks));
}

Seminorm::Seminorm(BlockAlgebra algebra, std::vector<std::size_t> support)
    : algebra_(std::move(algebra)), support_(std::move(support)) {
    std::sort(support_.begin(), support_.end());
    support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
    for (std::size_t i : support_) {
        if (i >= algebra_.block_count()) {
            throw AlgebraMismatch("Seminorm: support index out of range");
        }
    }
}

bool Seminorm::contains(std::size_t block) const {
    return std::binary_search(support_.begin(), support_.end(), block);
}

bool Seminorm::subsumes(const Seminorm& q) const {
    return std::includes(support_.begin(), support_.end(),
                         q.support_.begin(), q.support_.end());
}

Seminorm Seminorm::full(const BlockAlgebra& algebra) {
    std::vector<std::size_t> all(algebra.block_count());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return Seminorm(algebra, std::move(all));
}

namespace {

void require_same_algebra(const AlgElem& a, const AlgElem& b, const char* who) {
    if (a.algebra() != b.algebra()) throw AlgebraMismatch(who);
}

void require_same_algebra(const Seminorm& p, const AlgElem& a, const char* who) {
    if (p.algebra() != a.algebra()) throw AlgebraMismatch(who);
}

template <typename Fn>
AlgElem blockwise(const AlgElem& a, Fn&& fn) {
    std::vector<CMatrix> blocks;
    blocks.reserve(a.block_count());
    for (std::size_t i = 0; i < a.block_count(); ++i) blocks.push_back(fn(a.block(i)));
    return AlgElem(a.algebra(), std::move(blocks));
}

} // namespace

AlgElem operator+(const AlgElem& a, const AlgElem& b) {
    require_same_algebra(a, b, "AlgElem +: different algebras");
    std::vector<CMatrix> blocks;
    blocks.reserve(a.block_count());
    for (std::size_t i = 0; i < a.block_count(); ++i) blocks.push_back(a.block(i) + b.block(i));
    return AlgElem(a.algebra(), std::move(blocks));
}

AlgElem operator-(const AlgElem& a, const AlgElem& b) {
    require_same_algebra(a, b, "AlgElem -: different algebras");
    std::vector<CMatrix> blocks;
    blocks.reserve(a.block_count());
    for (std::size_t i = 0; i < a.block_count(); ++i) blocks.push_back(a.block(i) - b.block(i));
    return AlgElem(a.algebra(), std::move(blocks));
}

AlgElem operator*(const AlgElem& a, const AlgElem& b) {
    require_same_algebra(a, b, "AlgElem *: different algebras");
    std::vector<CMatrix> blocks;
    blocks.reserve(a.block_count());
    for (std::size_t i = 0; i < a.block_count(); ++i) blocks.push_back(a.block(i) * b.block(i));
    return AlgElem(a.algebra(), std::move(blocks));
}

AlgElem operator*(const Complex& s, const AlgElem& a) {
    return blockwise(a, [&](const CMatrix& m) { return s * m; });
}

AlgElem star(const AlgElem& a) {
    return blockwise(a, [](const CMatrix& m) { return adjoint(m); });
}

bool alg_equal(const AlgElem& a, const AlgElem& b) {
    if (a.algebra() != b.algebra()) return false;
    for (std::size_t i = 0; i < a.block_count(); ++i) {
        if (!(a.block(i) == b.block(i))) return false;
    }
    return true;
}

double alg_max_abs(const AlgElem& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.block_count(); ++i) m = std::max(m, max_abs(a.block(i)));
    return m;
}

double alg_seminorm(const Seminorm& p, const AlgElem& a) {
    require_same_algebra(p, a, "alg_seminorm: seminorm over a different algebra");
    double value = 0.0;
    for (std::size_t i : p.support()) value = std::max(value, op_norm(a.block(i)));
    return value;
}

bool alg_positive(const AlgElem& a, double tol) {
    if (tol < 0.0) tol = 1e-9 * (1.0 + alg_max_abs(a));
    for (std::size_t i = 0; i < a.block_count(); ++i) {
        const CMatrix& b = a.block(i);
        if (hermitian_defect(b) > tol) return false;
        EigResult eig = hermitian_eig(b, tol);
        if (!eig.eigenvalues.empty() && eig.eigenvalues.back() < -tol) return false;
    }
    return true;
}

BlockAlgebra localized_algebra(const Seminorm& p) {
    std::vector<std::size_t> dims;
    dims.reserve(p.support().size());
    for (std::size_t i : p.support()) dims.push_back(p.algebra().dim(i));
    return BlockAlgebra(std::move(dims));
}

AlgElem alg_localize(const Seminorm& p, const AlgElem& a) {
    require_same_algebra(p, a, "alg_localize: seminorm over a different algebra");
    std::vector<CMatrix> blocks;
    blocks.reserve(p.support().size());
    for (std::size_t i : p.support()) blocks.push_back(a.block(i));
    return AlgElem(localized_algebra(p), std::move(blocks));
}

AlgElem alg_connect(const Seminorm& p, const Seminorm& q, const AlgElem& a_p) {
    if (p.algebra() != q.algebra()) {
        throw AlgebraMismatch("alg_connect: seminorms over different algebras");
    }
    if (!p.subsumes(q)) {
        throw NotComparable("alg_connect: target support is not contained in the source support");
    }
    if (a_p.algebra() != localized_algebra(p)) {
        throw AlgebraMismatch("alg_connect: element does not live over the source quotient");
    }
    std::vector<CMatrix> blocks;
    blocks.reserve(q.support().size());
    for (std::size_t g : q.support()) {
        const auto& sup = p.support();
        const auto pos = std::lower_bound(sup.begin(), sup.end(), g) - sup.begin();
        blocks.push_back(a_p.block(static_cast<std::size_t>(pos)));
    }
    return AlgElem(localized_algebra(q), std::move(blocks));
}

AlgElem elem_pinv(const AlgElem& a) {
    return blockwise(a, [](const CMatrix& m) { return mat_pinv(m); });
}

} // namespace cstarmod
