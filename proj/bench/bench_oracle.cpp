// Serial reference vs OpenMP enumeration, plus the two S_n^(k)(x) engines.

#include <benchmark/benchmark.h>

#include "longrun/brute_oracle.hpp"
#include "longrun/conditional_counts.hpp"
#include "longrun/proposition1.hpp"

namespace {

void BM_EnumerateSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(longrun::enumerate_joint_serial(n));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(longrun::enumerate_joint(n));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

void BM_SnkDp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(longrun::snk_dp(n, 5));
}

void BM_SnkProposition1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto reconciliation = longrun::default_reconciliation();
  for (auto _ : state) benchmark::DoNotOptimize(longrun::snk_proposition1(n, 5, *reconciliation));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->DenseRange(16, 22, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->DenseRange(16, 22, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SnkDp)->RangeMultiplier(2)->Range(25, 400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SnkProposition1)->RangeMultiplier(2)->Range(25, 400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
