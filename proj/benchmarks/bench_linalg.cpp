#include <benchmark/benchmark.h>

#include "cstarmod/linalg.hpp"
#include "cstarmod/random_gen.hpp"

using namespace cstarmod;

namespace {

CMatrix fixed_random(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    Rng rng(seed);
    return random_matrix(rng, rows, cols);
}

void bm_hermitian_eig(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const CMatrix a = fixed_random(n, n, 11);
    const CMatrix h = adjoint(a) * a;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eig(h));
    }
}

void bm_svd(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const CMatrix a = fixed_random(n, n + 2, 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(svd(a));
    }
}

void bm_pinv(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const CMatrix a = fixed_random(n + 2, n, 13);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mat_pinv(a));
    }
}

void bm_psd_sqrt(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const CMatrix a = fixed_random(n, n, 14);
    const CMatrix p = adjoint(a) * a;
    for (auto _ : state) {
        benchmark::DoNotOptimize(psd_sqrt(p));
    }
}

} // namespace

BENCHMARK(bm_hermitian_eig)->Arg(4)->Arg(8)->Arg(16)->Arg(24);
BENCHMARK(bm_svd)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_pinv)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_psd_sqrt)->Arg(4)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
