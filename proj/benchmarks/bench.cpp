// Microbenchmarks for the hot paths: graph metrics, region formation,
// one averaging round and a whole trial.
#include <benchmark/benchmark.h>

#include <vector>

#include "beamnet/centroid.hpp"
#include "beamnet/config.hpp"
#include "beamnet/graph.hpp"
#include "beamnet/regions.hpp"
#include "beamnet/rng.hpp"
#include "beamnet/topology.hpp"
#include "beamnet/trial.hpp"

namespace {

using namespace beamnet;

WorldConfig config_for(std::uint32_t n) {
  WorldConfig cfg;
  cfg.n = n;
  cfg.seed = 42;
  return cfg;
}

Graph world_graph(std::uint32_t n) {
  const WorldConfig cfg = config_for(n);
  return unit_disk_graph(place_nodes(cfg, cfg.seed), cfg.radio_range);
}

void BM_AveragePathLength(benchmark::State& state) {
  const Graph g = world_graph(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(average_path_length(g));
}
BENCHMARK(BM_AveragePathLength)->Arg(60)->Arg(200)->Arg(400);

void BM_ClusteringCoefficient(benchmark::State& state) {
  const Graph g = world_graph(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(clustering_coefficient(g));
}
BENCHMARK(BM_ClusteringCoefficient)->Arg(60)->Arg(200)->Arg(400);

void BM_RegionFormation(benchmark::State& state) {
  const std::uint32_t n = static_cast<std::uint32_t>(state.range(0));
  const Graph g = world_graph(n);
  RegionOptions opt;
  for (auto _ : state)
    benchmark::DoNotOptimize(run_region_formation(g, opt, 42));
}
BENCHMARK(BM_RegionFormation)->Arg(60)->Arg(200)->Arg(400);

void BM_AveragingRound(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Graph g(n);
  for (NodeId v = 1; v < n; ++v) g.add_edge(v, v / 2);
  Rng rng(7);
  std::vector<Vec2> coords(n);
  for (Vec2& c : coords) c = {rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)};
  for (auto _ : state) {
    coords = averaging_round(g, coords);
    benchmark::DoNotOptimize(coords);
  }
}
BENCHMARK(BM_AveragingRound)->Arg(8)->Arg(30);

void BM_FullTrial(benchmark::State& state) {
  const WorldConfig cfg = config_for(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_trial(cfg));
}
BENCHMARK(BM_FullTrial)->Arg(60)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
