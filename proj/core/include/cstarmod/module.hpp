#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cstarmod/algebra.hpp"

namespace cstarmod {

// The free right Hilbert module A^n over a block algebra, carrying the
// A-valued inner product ⟨x,y⟩ = Σ_i x_i^* y_i. Rank 0 is the zero module.
class FreeModule {
public:
    FreeModule() = default;
    FreeModule(BlockAlgebra algebra, std::size_t rank)
        : algebra_(std::move(algebra)), rank_(rank) {}

    const BlockAlgebra& algebra() const { return algebra_; }
    std::size_t rank() const { return rank_; }

    friend bool operator==(const FreeModule& a, const FreeModule& b) {
        return a.algebra_ == b.algebra_ && a.rank_ == b.rank_;
    }
    friend bool operator!=(const FreeModule& a, const FreeModule& b) { return !(a == b); }

private:
    BlockAlgebra algebra_;
    std::size_t rank_ = 0;
};

class ModVector {
public:
    ModVector() = default;
    explicit ModVector(FreeModule module); // zero vector
    ModVector(FreeModule module, std::vector<AlgElem> coords);

    const FreeModule& module() const { return module_; }
    std::size_t rank() const { return module_.rank(); }
    const AlgElem& coord(std::size_t i) const { return coords_.at(i); }
    AlgElem& coord(std::size_t i) { return coords_.at(i); }
    const std::vector<AlgElem>& coords() const { return coords_; }

    // i-th standard basis vector: identity in coordinate i, zero elsewhere.
    static ModVector basis(const FreeModule& module, std::size_t i);

private:
    FreeModule module_;
    std::vector<AlgElem> coords_;
};

// A finitely generated submodule of a free module, given by its generators.
// The empty generator list is the zero submodule.
class Submodule {
public:
    Submodule() = default;
    explicit Submodule(FreeModule module) : module_(std::move(module)) {}
    Submodule(FreeModule module, std::vector<ModVector> generators);

    const FreeModule& module() const { return module_; }
    const std::vector<ModVector>& generators() const { return generators_; }

private:
    FreeModule module_;
    std::vector<ModVector> generators_;
};

ModVector operator+(const ModVector& x, const ModVector& y);
ModVector operator-(const ModVector& x, const ModVector& y);
ModVector operator*(const ModVector& x, const AlgElem& a); // right module action
ModVector operator*(const Complex& s, const ModVector& x);

bool vec_equal(const ModVector& x, const ModVector& y);
double vec_max_abs(const ModVector& x);

// ⟨x,y⟩ = Σ_i x_i^* y_i — conjugate-linear in x, A-linear in y.
AlgElem inner(const ModVector& x, const ModVector& y);

// p̄(x) = sqrt(p(⟨x,x⟩)).
double vec_seminorm(const Seminorm& p, const ModVector& x);

// E ⊕ F with the summed inner product; pair/split move between the pictures.
FreeModule direct_sum(const FreeModule& e, const FreeModule& f);
ModVector pair_vec(const ModVector& x, const ModVector& y);
std::pair<ModVector, ModVector> split_vec(const ModVector& z, const FreeModule& e,
                                          const FreeModule& f);

FreeModule localized_module(const Seminorm& p, const FreeModule& e);
ModVector vec_localize(const Seminorm& p, const ModVector& x);
ModVector vec_connect(const Seminorm& p, const Seminorm& q, const ModVector& x_p);
Submodule submodule_localize(const Seminorm& p, const Submodule& f);

} // namespace cstarmod
