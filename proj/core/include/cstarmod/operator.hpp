#pragma once

#include <array>
#include <variant>
#include <vector>

#include "cstarmod/module.hpp"

namespace cstarmod {

// A bounded adjointable module map A^n -> A^m, stored as an m×n matrix of
// algebra elements acting by (Tx)_i = Σ_j entries(i,j)·x_j.
//
// At block b the map has a raw realization: module elements localize to
// stacked matrices X ∈ C^{(n·n_b)×n_b}, and the map acts as X ↦ L_b·X where
// L_b is the (m·n_b)×(n·n_b) tile matrix whose (i,j) tile is entry (i,j) at
// block b. All numerics (pseudoinverse, square root, norms, projectors) are
// computed on the L_b and carved back into entries; this is sound because
// left multiplications are exactly the maps commuting with the right module
// action, a fact the recognition tests assert rather than assume.
class ModuleMap {
public:
    ModuleMap() = default;
    ModuleMap(FreeModule domain, FreeModule codomain); // zero map
    ModuleMap(FreeModule domain, FreeModule codomain, std::vector<AlgElem> entries);

    const FreeModule& domain() const { return domain_; }
    const FreeModule& codomain() const { return codomain_; }
    const BlockAlgebra& algebra() const { return domain_.algebra(); }
    const AlgElem& entry(std::size_t i, std::size_t j) const;
    AlgElem& entry(std::size_t i, std::size_t j);

    static ModuleMap identity(const FreeModule& e);

private:
    FreeModule domain_;
    FreeModule codomain_;
    std::vector<AlgElem> entries_; // row-major, codomain rank × domain rank
};

ModuleMap operator+(const ModuleMap& s, const ModuleMap& t);
ModuleMap operator-(const ModuleMap& s, const ModuleMap& t);
ModuleMap operator*(const Complex& c, const ModuleMap& t);
ModuleMap compose(const ModuleMap& s, const ModuleMap& t); // s after t

bool map_equal(const ModuleMap& s, const ModuleMap& t); // bitwise on values
double map_max_abs(const ModuleMap& t);

ModVector apply_op(const ModuleMap& t, const ModVector& x);
ModuleMap adjoint_op(const ModuleMap& t);

// The raw realization L_b at block b, and its inverse (tile carving).
CMatrix block_matrix(const ModuleMap& t, std::size_t b);
ModuleMap map_from_blocks(const FreeModule& domain, const FreeModule& codomain,
                          const std::vector<CMatrix>& blocks);

// p̃(T): largest raw-block operator norm over the support. bound_constant is
// the least K with p̄(Tx) ≤ K·p̄(x), which is the same number.
double op_seminorm(const Seminorm& p, const ModuleMap& t);
double bound_constant(const Seminorm& p, const ModuleMap& t);

// An arbitrary C-linear map on the underlying vector space of A^n, the
// vehicle for deciding whether a linear map respects the module action.
// Block b acts on the column-major vectorization of the stacked realization
// X ∈ C^{(n·n_b)×n_b}, so its matrix has shape (m·n_b²)×(n·n_b²). A module
// map embeds as I_{n_b} ⊗ L_b.
class RawLinearMap {
public:
    RawLinearMap() = default;
    RawLinearMap(BlockAlgebra algebra, std::size_t domain_rank, std::size_t codomain_rank,
                 std::vector<CMatrix> blocks);

    const BlockAlgebra& algebra() const { return algebra_; }
    std::size_t domain_rank() const { return domain_rank_; }
    std::size_t codomain_rank() const { return codomain_rank_; }
    const CMatrix& block(std::size_t b) const { return blocks_.at(b); }
    CMatrix& block(std::size_t b) { return blocks_.at(b); }
    const std::vector<CMatrix>& blocks() const { return blocks_; }

private:
    BlockAlgebra algebra_;
    std::size_t domain_rank_ = 0;
    std::size_t codomain_rank_ = 0;
    std::vector<CMatrix> blocks_;
};

RawLinearMap raw_from_map(const ModuleMap& t);

// Apply a raw block to a stacked realization (column-by-column), used to
// compare raw action against the entrywise module formula.
CMatrix raw_apply_block(const RawLinearMap& r, std::size_t b, const CMatrix& x);

struct ModuleMapRejection {
    std::size_t block;    // first offending block
    std::size_t unit_row; // matrix unit e_{uv} whose right action fails to commute
    std::size_t unit_col;
    double residual;      // operator norm of the commutator
};

// Decides module-linearity: every block must commute with right
// multiplication by all matrix units of its block algebra (residual ≤ tol);
// the tile matrix is then extracted bit-exactly from the first diagonal
// block of I ⊗ L. Rejection reports the first violation.
std::variant<ModuleMap, ModuleMapRejection> module_map_recognize(const RawLinearMap& r,
                                                                 double tol = 1e-10);

// Blockwise Moore-Penrose inverse of the raw realization.
ModuleMap pinv_op(const ModuleMap& t);

// ‖TST−T‖, ‖STS−S‖, ‖(TS)*−TS‖, ‖(ST)*−ST‖ at full support.
std::array<double, 4> penrose_residuals(const ModuleMap& t, const ModuleMap& s);

struct PolarParts {
    ModuleMap v;    // partial isometry
    ModuleMap abs;  // |T| = (T*T)^{1/2}, positive
};
// T = V|T| with Ker(V) = Ker(T) and Ran(V) = Ran(T); |T| from the blockwise
// PSD square root, V = T·|T|†.
PolarParts polar_op(const ModuleMap& t);

// Projection onto the graph {(x, Tx)} inside domain ⊕ codomain: per block
// the column-space projector of the stacked matrix [I; L_b].
ModuleMap graph_projector(const ModuleMap& t);

struct KernelRange {
    ModuleMap p_ker; // I − T†T, projects onto Ker(T)
    ModuleMap p_ran; // TT†, projects onto Ran(T)
};
KernelRange kernel_range_projectors(const ModuleMap& t);

struct BoundedBelow {
    double value = 0.0;     // largest c with p̄(Tx) ≥ c·p̄(x) on Ker(T)^⊥
    bool degenerate = false; // no nonzero singular values on the support
};
// Minimum over support blocks of the smallest nonzero singular value of the
// raw block; blocks that vanish entirely contribute nothing (a vector
// supported there lies in the kernel).
BoundedBelow bounded_below_constant(const ModuleMap& t, const Seminorm& p);

struct OpPredicates {
    bool idempotent = false;
    bool projection = false;
    bool unitary = false;
    bool partial_isometry = false;
    bool selfadjoint = false;
    bool positive = false;
};
// Endomorphisms only (throws ShapeMismatch otherwise); negative tol selects
// 1e-9·(1+‖t‖). For rectangular maps use is_unitary / is_partial_isometry.
OpPredicates op_predicates(const ModuleMap& t, double tol = -1.0);
bool is_unitary(const ModuleMap& t, double tol = -1.0);
bool is_partial_isometry(const ModuleMap& t, double tol = -1.0);

// Per block, the orthogonal projector onto the column space of the raw
// realization, W·W†. Agrees with TT† up to rounding; used as the
// independent second path in biorthogonality checks.
ModuleMap range_projector(const ModuleMap& t);

// Orthogonal projector onto the submodule generated by f: per block the
// column-space projector of the concatenated generator realizations.
ModuleMap submodule_projector(const Submodule& f);
ModuleMap orth_complement(const Submodule& f); // I − submodule_projector(f)

// ‖(I − range_projector(I−P)) − P‖ at full support, P = submodule_projector:
// distance between F and its biorthogonal complement F^⊥⊥.
double biorth_residual(const Submodule& f);
bool biorth_check(const Submodule& f, double tol = 1e-9);

} // namespace cstarmod
