#include <benchmark/benchmark.h>

#include "prelog/exactlin.hpp"
#include "support/generators.hpp"

using namespace prelog;

static void BM_Snf(benchmark::State& state) {
  gen::Rng rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto A = gen::matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(snf(A));
}
BENCHMARK(BM_Snf)->Arg(8)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMicrosecond);

// Shape and sparsity of the prelog boundary maps: about one nonzero in six,
// entries of absolute value at most 3.
static void BM_SnfSparse(benchmark::State& state) {
  gen::Rng rng(4);
  IntMatrix A(39, 32);
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t c = 0; c < A.cols(); ++c)
      if (gen::uniform(rng, 0, 5) == 0) A(r, c) = gen::uniform(rng, -3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(snf(A));
}
BENCHMARK(BM_SnfSparse)->Unit(benchmark::kMicrosecond);

static void BM_Hnf(benchmark::State& state) {
  gen::Rng rng(5);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto A = gen::matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(hnf(A));
}
BENCHMARK(BM_Hnf)->Arg(8)->Arg(16)->Arg(32)->Arg(40)->Unit(benchmark::kMicrosecond);

static void BM_RankModP(benchmark::State& state) {
  gen::Rng rng(7);
  const auto A = gen::matrix(rng, 40, 40);
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(A, 2));
}
BENCHMARK(BM_RankModP);

static void BM_Saturate(benchmark::State& state) {
  gen::Rng rng(9);
  const auto A = gen::matrix(rng, 17, 6);
  for (auto _ : state) benchmark::DoNotOptimize(saturate(A));
}
BENCHMARK(BM_Saturate);
