// Serial reference kernel vs the OpenMP grid kernel.
#include <benchmark/benchmark.h>

#include "basinlab/dynamics.hpp"

namespace bl = basinlab;

namespace {

bl::GridSpec spec_for(int res) {
    bl::GridSpec s;
    s.resolution = res;
    return s;
}

void BM_GridSerial(benchmark::State& state) {
    const auto m = bl::MethodMap::family(bl::MethodKind::Halley, static_cast<int>(state.range(0)));
    const auto spec = spec_for(static_cast<int>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bl::compute_grid_serial(m, spec));
    }
    state.SetItemsProcessed(state.iterations() * state.range(1) * state.range(1));
}

void BM_GridParallel(benchmark::State& state) {
    const auto m = bl::MethodMap::family(bl::MethodKind::Halley, static_cast<int>(state.range(0)));
    const auto spec = spec_for(static_cast<int>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bl::compute_grid(m, spec));
    }
    state.SetItemsProcessed(state.iterations() * state.range(1) * state.range(1));
}

void BM_TraubGridParallel(benchmark::State& state) {
    const auto m = bl::MethodMap::family(bl::MethodKind::Traub, static_cast<int>(state.range(0)));
    const auto spec = spec_for(static_cast<int>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bl::compute_grid(m, spec));
    }
    state.SetItemsProcessed(state.iterations() * state.range(1) * state.range(1));
}

}  // namespace

BENCHMARK(BM_GridSerial)->Args({3, 201})->Args({6, 401})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Args({3, 201})->Args({6, 401})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TraubGridParallel)->Args({4, 401})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
