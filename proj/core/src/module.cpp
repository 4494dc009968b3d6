#include "cstarmod/module.hpp"

#include <cmath>

namespace cstarmod {

ModVector::ModVector(FreeModule module) : module_(std::move(module)) {
    coords_.assign(module_.rank(), AlgElem(module_.algebra()));
}

ModVector::ModVector(FreeModule module, std::vector<AlgElem> coords)
    : module_(std::move(module)), coords_(std::move(coords)) {
    if (coords_.size() != module_.rank()) {
        throw ModuleMismatch("ModVector: coordinate count does not match the rank");
    }
    for (const AlgElem& c : coords_) {
        if (c.algebra() != module_.algebra()) {
            throw ModuleMismatch("ModVector: coordinate over a different algebra");
        }
    }
}

ModVector ModVector::basis(const FreeModule& module, std::size_t i) {
    if (i >= module.rank()) throw ModuleMismatch("ModVector::basis: index out of range");
    ModVector x(module);
    x.coords_[i] = AlgElem::identity(module.algebra());
    return x;
}

Submodule::Submodule(FreeModule module, std::vector<ModVector> generators)
    : module_(std::move(module)), generators_(std::move(generators)) {
    for (const ModVector& g : generators_) {
        if (g.module() != module_) {
            throw ModuleMismatch("Submodule: generator lives in a different module");
        }
    }
}

namespace {

void require_same_module(const ModVector& x, const ModVector& y, const char* who) {
    if (x.module() != y.module()) throw ModuleMismatch(who);
}

} // namespace

ModVector operator+(const ModVector& x, const ModVector& y) {
    require_same_module(x, y, "ModVector +: different modules");
    std::vector<AlgElem> coords;
    coords.reserve(x.rank());
    for (std::size_t i = 0; i < x.rank(); ++i) coords.push_back(x.coord(i) + y.coord(i));
    return ModVector(x.module(), std::move(coords));
}

ModVector operator-(const ModVector& x, const ModVector& y) {
    require_same_module(x, y, "ModVector -: different modules");
    std::vector<AlgElem> coords;
    coords.reserve(x.rank());
    for (std::size_t i = 0; i < x.rank(); ++i) coords.push_back(x.coord(i) - y.coord(i));
    return ModVector(x.module(), std::move(coords));
}

ModVector operator*(const ModVector& x, const AlgElem& a) {
    if (a.algebra() != x.module().algebra()) {
        throw AlgebraMismatch("ModVector * AlgElem: different algebras");
    }
    std::vector<AlgElem> coords;
    coords.reserve(x.rank());
    for (std::size_t i = 0; i < x.rank(); ++i) coords.push_back(x.coord(i) * a);
    return ModVector(x.module(), std::move(coords));
}

ModVector operator*(const Complex& s, const ModVector& x) {
    std::vector<AlgElem> coords;
    coords.reserve(x.rank());
    for (std::size_t i = 0; i < x.rank(); ++i) coords.push_back(s * x.coord(i));
    return ModVector(x.module(), std::move(coords));
}

bool vec_equal(const ModVector& x, const ModVector& y) {
    if (x.module() != y.module()) return false;
    for (std::size_t i = 0; i < x.rank(); ++i) {
        if (!alg_equal(x.coord(i), y.coord(i))) return false;
    }
    return true;
}

double vec_max_abs(const ModVector& x) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.rank(); ++i) m = std::max(m, alg_max_abs(x.coord(i)));
    return m;
}

AlgElem inner(const ModVector& x, const ModVector& y) {
    require_same_module(x, y, "inner: different modules");
    AlgElem acc(x.module().algebra());
    for (std::size_t i = 0; i < x.rank(); ++i) {
        acc = acc + star(x.coord(i)) * y.coord(i);
    }
    return acc;
}

double vec_seminorm(const Seminorm& p, const ModVector& x) {
    return std::sqrt(alg_seminorm(p, inner(x, x)));
}

FreeModule direct_sum(const FreeModule& e, const FreeModule& f) {
    if (e.algebra() != f.algebra()) throw AlgebraMismatch("direct_sum: different algebras");
    return FreeModule(e.algebra(), e.rank() + f.rank());
}

ModVector pair_vec(const ModVector& x, const ModVector& y) {
    std::vector<AlgElem> coords;
    coords.reserve(x.rank() + y.rank());
    for (std::size_t i = 0; i < x.rank(); ++i) coords.push_back(x.coord(i));
    for (std::size_t i = 0; i < y.rank(); ++i) coords.push_back(y.coord(i));
    return ModVector(direct_sum(x.module(), y.module()), std::move(coords));
}

std::pair<ModVector, ModVector> split_vec(const ModVector& z, const FreeModule& e,
                                          const FreeModule& f) {
    if (z.module() != direct_sum(e, f)) {
        throw ModuleMismatch("split_vec: vector does not live in the stated direct sum");
    }
    std::vector<AlgElem> xs(z.coords().begin(),
                            z.coords().begin() + static_cast<std::ptrdiff_t>(e.rank()));
    std::vector<AlgElem> ys(z.coords().begin() + static_cast<std::ptrdiff_t>(e.rank()),
                            z.coords().end());
    return {ModVector(e, std::move(xs)), ModVector(f, std::move(ys))};
}

FreeModule localized_module(const Seminorm& p, const FreeModule& e) {
    if (p.algebra() != e.algebra()) {
        throw AlgebraMismatch("localized_module: seminorm over a different algebra");
    }
    return FreeModule(localized_algebra(p), e.rank());
}

ModVector vec_localize(const Seminorm& p, const ModVector& x) {
    std::vector<AlgElem> coords;
    coords.reserve(x.rank());
    for (std::size_t i = 0; i < x.rank(); ++i) coords.push_back(alg_localize(p, x.coord(i)));
    return ModVector(localized_module(p, x.module()), std::move(coords));
}

ModVector vec_connect(const Seminorm& p, const Seminorm& q, const ModVector& x_p) {
    const FreeModule target(localized_algebra(q), x_p.rank());
    std::vector<AlgElem> coords;
    coords.reserve(x_p.rank());
    for (std::size_t i = 0; i < x_p.rank(); ++i) {
        coords.push_back(alg_connect(p, q, x_p.coord(i)));
    }
    return ModVector(target, std::move(coords));
}

Submodule submodule_localize(const Seminorm& p, const Submodule& f) {
    std::vector<ModVector> gens;
    gens.reserve(f.generators().size());
    for (const ModVector& g : f.generators()) gens.push_back(vec_localize(p, g));
    return Submodule(localized_module(p, f.module()), std::move(gens));
}

} // namespace cstarmod
