#pragma once

#include <cstddef>
#include <vector>

#include "cstarmod/cmatrix.hpp"
#include "cstarmod/errors.hpp"

namespace cstarmod {

// A finite direct sum of full complex matrix algebras, ⊕_i M_{n_i}.
// The degenerate zero-block case (k = 0) is allowed: it is the zero algebra
// that appears as the quotient by the empty seminorm support, and keeping it
// first-class lets the coherence laws hold without special cases.
class BlockAlgebra {
public:
    BlockAlgebra() = default;
    explicit BlockAlgebra(std::vector<std::size_t> dims);

    std::size_t block_count() const { return dims_.size(); }
    std::size_t dim(std::size_t i) const { return dims_.at(i); }
    const std::vector<std::size_t>& dims() const { return dims_; }

    friend bool operator==(const BlockAlgebra& a, const BlockAlgebra& b) {
        return a.dims_ == b.dims_;
    }
    friend bool operator!=(const BlockAlgebra& a, const BlockAlgebra& b) { return !(a == b); }

private:
    std::vector<std::size_t> dims_;
};

// One element of a BlockAlgebra: a square matrix per block.
class AlgElem {
public:
    AlgElem() = default;
    explicit AlgElem(BlockAlgebra algebra); // zero element
    AlgElem(BlockAlgebra algebra, std::vector<CMatrix> blocks);

    const BlockAlgebra& algebra() const { return algebra_; }
    std::size_t block_count() const { return blocks_.size(); }
    const CMatrix& block(std::size_t i) const { return blocks_.at(i); }
    CMatrix& block(std::size_t i) { return blocks_.at(i); }
    const std::vector<CMatrix>& blocks() const { return blocks_; }

    static AlgElem identity(const BlockAlgebra& algebra);

private:
    BlockAlgebra algebra_;
    std::vector<CMatrix> blocks_;
};

// A C*-seminorm on the algebra, identified by its support: the set of block
// indices it sees. p(a) = max over support of the block operator norms.
// Supports are kept sorted and deduplicated; inclusion gives the lattice order.
class Seminorm {
public:
    Seminorm() = default;
    Seminorm(BlockAlgebra algebra, std::vector<std::size_t> support);

    const BlockAlgebra& algebra() const { return algebra_; }
    const std::vector<std::size_t>& support() const { return support_; }
    bool contains(std::size_t block) const;
    bool subsumes(const Seminorm& q) const; // support(q) ⊆ support(this)

    static Seminorm full(const BlockAlgebra& algebra);

    friend bool operator==(const Seminorm& a, const Seminorm& b) {
        return a.algebra_ == b.algebra_ && a.support_ == b.support_;
    }

private:
    BlockAlgebra algebra_;
    std::vector<std::size_t> support_;
};

AlgElem operator+(const AlgElem& a, const AlgElem& b);
AlgElem operator-(const AlgElem& a, const AlgElem& b);
AlgElem operator*(const AlgElem& a, const AlgElem& b); // blockwise product
AlgElem operator*(const Complex& s, const AlgElem& a);
AlgElem star(const AlgElem& a); // blockwise conjugate transpose

bool alg_equal(const AlgElem& a, const AlgElem& b); // bitwise on values (±0 compare equal)
double alg_max_abs(const AlgElem& a);

// Largest block operator norm over the support; 0 for empty support.
double alg_seminorm(const Seminorm& p, const AlgElem& a);

// True iff each block is Hermitian within tol and its smallest eigenvalue is
// ≥ -tol. Negative tol requests the default 1e-9·(1+max|a|).
bool alg_positive(const AlgElem& a, double tol = -1.0);

// The algebra seen by a seminorm: the direct sum restricted to its support.
BlockAlgebra localized_algebra(const Seminorm& p);

// Quotient by the null space of p: keep exactly the support blocks.
AlgElem alg_localize(const Seminorm& p, const AlgElem& a);

// Connecting morphism between quotients: drop the blocks of support(p) that
// are missing from support(q). Requires support(q) ⊆ support(p); a_p must
// live over the algebra localized at p.
AlgElem alg_connect(const Seminorm& p, const Seminorm& q, const AlgElem& a_p);

// Blockwise Moore-Penrose inverse; satisfies the four defining identities.
AlgElem elem_pinv(const AlgElem& a);

} // namespace cstarmod
