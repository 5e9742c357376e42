// Parallel kernels against their serial schedule on the same inputs.

#include <benchmark/benchmark.h>

#include <random>

#include "factorlab/factor.hpp"
#include "factorlab/families.hpp"
#include "factorlab/toughness.hpp"

using namespace factorlab;

namespace {

Graph random_graph(int n, double p, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

Execution mode(const benchmark::State& state) {
  return state.range(1) ? Execution::Parallel : Execution::Serial;
}

void BM_Toughness(benchmark::State& state) {
  Graph g = random_graph(static_cast<int>(state.range(0)), 0.35, 1);
  for (auto _ : state) benchmark::DoNotOptimize(toughness(g, mode(state)));
}

void BM_ToughnessH5(benchmark::State& state) {
  Graph g = build_family("H5", {{"p", static_cast<int>(state.range(0))}}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(toughness(g, mode(state)));
}

void BM_FindBarrier(benchmark::State& state) {
  Graph g = build_family("H5", {{"p", static_cast<int>(state.range(0))}}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(find_barrier(g, mode(state)));
}

void BM_BiasedBarrier(benchmark::State& state) {
  Graph g = build_family("H12", {{"p", static_cast<int>(state.range(0))}}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(find_biased_barrier(g, mode(state)));
}

void BM_TTough(benchmark::State& state) {
  Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 2);
  Rational t(1);
  for (auto _ : state) benchmark::DoNotOptimize(is_t_tough(g, t, mode(state)));
}

}  // namespace

BENCHMARK(BM_Toughness)->ArgsProduct({{14, 18}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ToughnessH5)->ArgsProduct({{6, 9}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FindBarrier)->ArgsProduct({{5, 7}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BiasedBarrier)->ArgsProduct({{4, 6}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TTough)->ArgsProduct({{16, 18}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
