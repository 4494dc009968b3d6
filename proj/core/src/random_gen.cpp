#include "cstarmod/random_gen.hpp"

#include <cmath>

namespace cstarmod {

double Rng::normal() {
    // 1 - uniform() lies in (0, 1], keeping the logarithm finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

std::size_t Rng::index(std::size_t bound) {
    if (bound == 0) throw Error("Rng::index: empty range");
    return static_cast<std::size_t>(engine_() % bound);
}

CMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    CMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            out(i, j) = rng.cnormal();
        }
    }
    return out;
}

AlgElem random_element(Rng& rng, const BlockAlgebra& algebra) {
    std::vector<CMatrix> blocks;
    blocks.reserve(algebra.block_count());
    for (std::size_t b = 0; b < algebra.block_count(); ++b) {
        blocks.push_back(random_matrix(rng, algebra.dim(b), algebra.dim(b)));
    }
    return AlgElem(algebra, std::move(blocks));
}

ModVector random_vector(Rng& rng, const FreeModule& module) {
    std::vector<AlgElem> coords;
    coords.reserve(module.rank());
    for (std::size_t i = 0; i < module.rank(); ++i) {
        coords.push_back(random_element(rng, module.algebra()));
    }
    return ModVector(module, std::move(coords));
}

ModuleMap random_map(Rng& rng, const FreeModule& domain, const FreeModule& codomain) {
    std::vector<AlgElem> entries;
    entries.reserve(domain.rank() * codomain.rank());
    for (std::size_t i = 0; i < domain.rank() * codomain.rank(); ++i) {
        entries.push_back(random_element(rng, domain.algebra()));
    }
    return ModuleMap(domain, codomain, std::move(entries));
}

Submodule random_submodule(Rng& rng, const FreeModule& module, std::size_t max_generators) {
    const std::size_t count = rng.index(max_generators + 1);
    std::vector<ModVector> generators;
    generators.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        generators.push_back(random_vector(rng, module));
    }
    return Submodule(module, std::move(generators));
}

RawLinearMap random_raw(Rng& rng, const BlockAlgebra& algebra, std::size_t domain_rank,
                        std::size_t codomain_rank) {
    std::vector<CMatrix> blocks;
    blocks.reserve(algebra.block_count());
    for (std::size_t b = 0; b < algebra.block_count(); ++b) {
        const std::size_t nb = algebra.dim(b);
        blocks.push_back(
            random_matrix(rng, codomain_rank * nb * nb, domain_rank * nb * nb));
    }
    return RawLinearMap(algebra, domain_rank, codomain_rank, std::move(blocks));
}

} // namespace cstarmod
