#include <benchmark/benchmark.h>

#include "hidecs/analysis.hpp"
#include "hidecs/cliques.hpp"
#include "hidecs/datasets.hpp"
#include "hidecs/measures.hpp"
#include "hidecs/search.hpp"

namespace {

using namespace hidecs;

const Graph& village() {
  static const Graph g = load_dataset("indian-village").graph();
  return g;
}

void BM_MultiwayScore(benchmark::State& state) {
  const Partition& p = reference_partitions().get("ca-pi4");
  for (auto _ : state)
    benchmark::DoNotOptimize(hidecs2_notes(village(), p).value);
}
BENCHMARK(BM_MultiwayScore);

void BM_Modularity(benchmark::State& state) {
  const Partition& p = reference_partitions().get("newman-4");
  for (auto _ : state)
    benchmark::DoNotOptimize(newman_q(village(), p).value);
}
BENCHMARK(BM_Modularity);

void BM_BisectRestart(benchmark::State& state) {
  const Graph c = induced_subgraph(village(), reference_partitions().set("C"));
  std::vector<Vertex> all(c.vertex_count());
  for (int v = 0; v < c.vertex_count(); ++v) all[v] = v;
  SearchConfig cfg;
  cfg.latis = static_cast<int>(state.range(0));
  cfg.seed = 7;
  for (auto _ : state) benchmark::DoNotOptimize(bisect_best(c, all, cfg).value);
}
BENCHMARK(BM_BisectRestart)->Arg(1)->Arg(16)->Arg(128);

void BM_TopdownTree(benchmark::State& state) {
  const Graph c = induced_subgraph(village(), reference_partitions().set("C"));
  SearchConfig cfg;
  cfg.latis = 6;
  cfg.max_depth = 3;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cfg.seed = ++seed;
    benchmark::DoNotOptimize(decompose_topdown(c, cfg).root->split_value);
  }
}
BENCHMARK(BM_TopdownTree);

void BM_MaximalCliques(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(maximal_cliques(village()).size());
}
BENCHMARK(BM_MaximalCliques);

void BM_StablCycle141(benchmark::State& state) {
  SearchConfig cfg;
  cfg.measure = MeasureSpec{MeasureId::kNewmanQ};
  cfg.tie_policy = TiePolicy::kFirstCanonical;
  for (auto _ : state)
    benchmark::DoNotOptimize(stabl_search(village(), cfg).value);
}
BENCHMARK(BM_StablCycle141)->Unit(benchmark::kMillisecond);

void BM_CutEstimator(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        estimate_cut_stats(141, 1383, 75, state.range(0), ++seed).mean);
}
BENCHMARK(BM_CutEstimator)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
