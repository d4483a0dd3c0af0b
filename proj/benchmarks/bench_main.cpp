#include <benchmark/benchmark.h>

#include "btcayley/automorphism.hpp"
#include "btcayley/block_transposition.hpp"
#include "btcayley/cayley_map.hpp"
#include "btcayley/distance.hpp"
#include "btcayley/gamma.hpp"
#include "btcayley/isomorphism.hpp"

using namespace btcayley;

static void BM_Recognize(benchmark::State& state) {
  const auto points = all_permutations(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& pi : points) benchmark::DoNotOptimize(recognize(pi));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(points.size()));
}
BENCHMARK(BM_Recognize)->DenseRange(5, 7);

// The reversal is among the farthest points from the identity.
static void BM_BfsDistance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto source = Permutation::identity(n);
  const auto target = reverse_permutation(n);
  for (auto _ : state) benchmark::DoNotOptimize(bfs_distance(source, target));
}
BENCHMARK(BM_BfsDistance)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);

static void BM_GammaGraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_graph(n));
}
BENCHMARK(BM_GammaGraph)->DenseRange(6, 12, 2);

static void BM_AutGroupGamma(benchmark::State& state) {
  const Graph gamma = gamma_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(aut_group(gamma));
}
BENCHMARK(BM_AutGroupGamma)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

static void BM_StabilizerOfIdentity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stabilizer_of_identity(n));
}
BENCHMARK(BM_StabilizerOfIdentity)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_Faces(benchmark::State& state) {
  const CayleyMap m = bar_f_map(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(faces(m));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.dart_count()));
}
BENCHMARK(BM_Faces)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_IsRegular(benchmark::State& state) {
  const CayleyMap m = bar_f_map(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_regular(m));
}
BENCHMARK(BM_IsRegular)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

// Two 6-regular graphs on 120 vertices that are not isomorphic.
static void BM_IsomorphismSym5(benchmark::State& state) {
  const Graph a = build_cayley(5, bar_f_rotation(5));
  const Graph b = build_cayley(5, bar_f_n_rotation());
  for (auto _ : state) benchmark::DoNotOptimize(graphs_isomorphic(a, b));
}
BENCHMARK(BM_IsomorphismSym5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
