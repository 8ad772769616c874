#include <benchmark/benchmark.h>

#include "prelog/cubic3fold.hpp"

using namespace prelog;

static void BM_BuildScenario(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_cubic_threefold());
}
BENCHMARK(BM_BuildScenario)->Unit(benchmark::kMillisecond);

static void BM_PrelogDegree3(benchmark::State& state) {
  const auto s = build_cubic_threefold();
  for (auto _ : state) benchmark::DoNotOptimize(compute_prelog(s.cfg, 3));
}
BENCHMARK(BM_PrelogDegree3)->Unit(benchmark::kMillisecond);

static void BM_FullVerification(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_verification(build_cubic_threefold()));
}
BENCHMARK(BM_FullVerification)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
