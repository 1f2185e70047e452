#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "avgindep/extremal.hpp"
#include "avgindep/independence.hpp"
#include "avgindep/tree_enum.hpp"

using namespace avgindep;

namespace {

std::vector<Graph> random_graphs(int n, double p, int count) {
  std::mt19937_64 rng(n * 1000 + count);
  std::bernoulli_distribution coin(p);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    out.emplace_back(n, edges);
  }
  return out;
}

Graph random_tree(int n) {
  std::mt19937_64 rng(n);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  return Graph(n, edges);
}

void BM_EngineRandomGraph(benchmark::State& state) {
  const auto graphs = random_graphs(static_cast<int>(state.range(0)), 0.3, 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(indep_poly(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_EngineRandomGraph)->Arg(12)->Arg(20)->Arg(28)->Arg(36);

void BM_BruteForce(benchmark::State& state) {
  const auto graphs = random_graphs(static_cast<int>(state.range(0)), 0.3, 8);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_poly(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_BruteForce)->Arg(12)->Arg(16)->Arg(20);

void BM_TreeDp(benchmark::State& state) {
  const Graph t = random_tree(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(indep_poly_tree(t));
}
BENCHMARK(BM_TreeDp)->Arg(16)->Arg(32)->Arg(64);

void BM_TreeMemo(benchmark::State& state) {
  const Graph t = random_tree(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(indep_poly_recursive(t));
}
BENCHMARK(BM_TreeMemo)->Arg(16)->Arg(32)->Arg(64);

void BM_EnumerateTrees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for (auto it = enumerate_trees(n).begin(); it != enumerate_trees(n).end(); ++it) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateTrees)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_VerifyPathMin(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_path_min(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VerifyPathMin)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
