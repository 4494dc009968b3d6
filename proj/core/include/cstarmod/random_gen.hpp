#pragma once

#include <cstdint>
#include <random>

#include "cstarmod/operator.hpp"

namespace cstarmod {

// Deterministic random source. mt19937_64 output is pinned by the standard,
// and the uniform/normal transforms below are written out explicitly, so a
// seed produces the same stream on every platform — the std distribution
// classes are implementation-defined and deliberately avoided.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller (cosine branch only, for a stride-free
    // deterministic stream).
    double normal();

    // Independent standard-normal real and imaginary parts.
    Complex cnormal() {
        const double re = normal();
        const double im = normal();
        return Complex(re, im);
    }

    // Uniform index in [0, bound); bound must be positive.
    std::size_t index(std::size_t bound);

private:
    std::mt19937_64 engine_;
};

CMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);
AlgElem random_element(Rng& rng, const BlockAlgebra& algebra);
ModVector random_vector(Rng& rng, const FreeModule& module);
ModuleMap random_map(Rng& rng, const FreeModule& domain, const FreeModule& codomain);

// Generator count is sampled in 0..max_generators to cover the empty and
// overcomplete boundary cases.
Submodule random_submodule(Rng& rng, const FreeModule& module, std::size_t max_generators);

RawLinearMap random_raw(Rng& rng, const BlockAlgebra& algebra, std::size_t domain_rank,
                        std::size_t codomain_rank);

} // namespace cstarmod
