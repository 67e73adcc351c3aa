#include <benchmark/benchmark.h>

#include <random>

#include "liftcheck/liftcheck.hpp"

using namespace liftcheck;

namespace {

IntMatrix random_matrix(std::size_t n, long bound, std::mt19937& rng) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<Integer> e(n * n);
  for (auto& x : e) x = dist(rng);
  return IntMatrix(n, n, std::move(e));
}

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937 rng(1);
  IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 50, rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_MatrixOrder(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  IntMatrix m = induced_h1_action(build_graph_realization(DecompositionType{7, 0, n / 12, n / 14}));
  for (auto _ : state) benchmark::DoNotOptimize(matrix_order(m));
}
BENCHMARK(BM_MatrixOrder)->Arg(14)->Arg(28)->Arg(42);

void BM_CanonicalKey(benchmark::State& state) {
  GraphOfGroups g({6, 6, 3}, {GogEdge{0, 1, 3, 1, 2}, GogEdge{1, 2, 3}, GogEdge{0, 0, 6, 1, 5}, GogEdge{2, 2, 3, 1, 2},
                              GogEdge{0, 2, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(g));
}
BENCHMARK(BM_CanonicalKey);

void BM_PhiNonlift(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const bool prune = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(verify_phi_nonlift(n, prune));
}
BENCHMARK(BM_PhiNonlift)->Args({4, 1})->Args({6, 1})->Args({4, 0})->Args({5, 0})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
