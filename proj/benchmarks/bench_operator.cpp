#include <benchmark/benchmark.h>

#include "cstarmod/localization.hpp"
#include "cstarmod/random_gen.hpp"
#include "cstarmod/verify.hpp"

using namespace cstarmod;

namespace {

ModuleMap fixed_map(const BlockAlgebra& alg, std::size_t n, std::size_t m,
                    std::uint64_t seed) {
    Rng rng(seed);
    return random_map(rng, FreeModule(alg, n), FreeModule(alg, m));
}

void bm_pinv_op(benchmark::State& state) {
    const BlockAlgebra alg({1, 2, 3});
    const auto r = static_cast<std::size_t>(state.range(0));
    const ModuleMap t = fixed_map(alg, r, r, 21);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pinv_op(t));
    }
}

void bm_polar_op(benchmark::State& state) {
    const BlockAlgebra alg({1, 2, 3});
    const auto r = static_cast<std::size_t>(state.range(0));
    const ModuleMap t = fixed_map(alg, r, r, 22);
    for (auto _ : state) {
        benchmark::DoNotOptimize(polar_op(t));
    }
}

void bm_graph_projector(benchmark::State& state) {
    const BlockAlgebra alg({1, 2, 3});
    const auto r = static_cast<std::size_t>(state.range(0));
    const ModuleMap t = fixed_map(alg, r, r, 23);
    for (auto _ : state) {
        benchmark::DoNotOptimize(graph_projector(t));
    }
}

void bm_recognize(benchmark::State& state) {
    const BlockAlgebra alg({1, 2, 3});
    const auto r = static_cast<std::size_t>(state.range(0));
    const RawLinearMap raw = raw_from_map(fixed_map(alg, r, r, 24));
    for (auto _ : state) {
        benchmark::DoNotOptimize(module_map_recognize(raw));
    }
}

void bm_commutation_suite(benchmark::State& state) {
    const BlockAlgebra alg({1, 2});
    const ModuleMap t = fixed_map(alg, 2, 2, 25);
    const auto family = seminorm_family(alg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(commutation_suite(t, family, 1, 7));
    }
}

void bm_theorem_trial(benchmark::State& state) {
    TrialConfig cfg;
    cfg.dims = {1, 2};
    cfg.trials = 1;
    cfg.seed = 26;
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_theorem(cfg));
    }
}

} // namespace

BENCHMARK(bm_pinv_op)->Arg(1)->Arg(2)->Arg(4);
BENCHMARK(bm_polar_op)->Arg(1)->Arg(2)->Arg(4);
BENCHMARK(bm_graph_projector)->Arg(1)->Arg(2)->Arg(4);
BENCHMARK(bm_recognize)->Arg(1)->Arg(2)->Arg(4);
BENCHMARK(bm_commutation_suite);
BENCHMARK(bm_theorem_trial);

BENCHMARK_MAIN();
