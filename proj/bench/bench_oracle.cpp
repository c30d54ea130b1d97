// Serial against parallel permutation kernels.

#include "hs/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace hs;

namespace {

void convolution(benchmark::State& state, Exec exec) {
    const int d = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(class_totals_by_convolution(d, k, exec));
}

void exhaustive(benchmark::State& state, Exec exec) {
    FactorizationQuery q;
    q.d = static_cast<int>(state.range(0));
    q.mu = {q.d};
    q.k = static_cast<int>(state.range(1));
    q.transitive = true;
    for (auto _ : state) benchmark::DoNotOptimize(count_factorizations(q, exec));
}

}  // namespace

BENCHMARK_CAPTURE(convolution, serial, Exec::serial)->Args({6, 10})->Args({7, 12})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(convolution, parallel, Exec::parallel)->Args({6, 10})->Args({7, 12})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(exhaustive, serial, Exec::serial)->Args({4, 7})->Args({5, 6})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(exhaustive, parallel, Exec::parallel)->Args({4, 7})->Args({5, 6})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
