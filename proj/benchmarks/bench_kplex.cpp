#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "kplex/bkpivot.hpp"
#include "kplex/graph.hpp"
#include "kplex/plex.hpp"
#include "kplex/scheduler.hpp"
#include "kplex/seeder.hpp"

namespace {

using kplex::ExternalId;

// Dense blocks of block_size vertices plus `noise` random cross edges per
// vertex on average, so degrees stay flat as n grows.
kplex::Graph communities(std::size_t n, std::size_t block_size, double p_in, double noise,
                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<ExternalId> any(0, n - 1);
  std::vector<std::pair<ExternalId, ExternalId>> edges;
  for (ExternalId v = 0; v < n; ++v) edges.emplace_back(v, v);
  for (ExternalId base = 0; base < n; base += block_size) {
    const ExternalId end = std::min<ExternalId>(base + block_size, n);
    for (ExternalId u = base; u < end; ++u) {
      for (ExternalId v = u + 1; v < end; ++v) {
        if (unit(rng) < p_in) edges.emplace_back(u, v);
      }
    }
  }
  const auto cross = static_cast<std::size_t>(noise * static_cast<double>(n) / 2);
  for (std::size_t i = 0; i < cross; ++i) {
    const ExternalId u = any(rng), v = any(rng);
    if (u != v) edges.emplace_back(u, v);
  }
  return kplex::build_graph(edges);
}

void BM_DegeneracyOrder(benchmark::State& state) {
  const auto g = communities(static_cast<std::size_t>(state.range(0)), 20, 0.5, 3.0, 7);
  for (auto _ : state) benchmark::DoNotOptimize(kplex::degeneracy_order(g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.num_vertices()));
}
BENCHMARK(BM_DegeneracyOrder)->RangeMultiplier(4)->Range(256, 16384);

void BM_SeedGraph(benchmark::State& state) {
  const auto g = communities(2000, 20, 0.6, 3.0, 11);
  const auto ord = kplex::degeneracy_order(g);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kplex::build_seed_graph(g, ord, i));
    i = (i + 1) % g.num_vertices();
  }
}
BENCHMARK(BM_SeedGraph);

// Args: k, l, threads.
void BM_Run(benchmark::State& state) {
  const auto g = communities(600, 30, 0.7, 6.0, 23);
  kplex::RunConfig cfg;
  cfg.k = static_cast<int>(state.range(0));
  cfg.l = static_cast<int>(state.range(1));
  cfg.threads = static_cast<int>(state.range(2));
  cfg.count_only = true;
  std::uint64_t count = 0;
  for (auto _ : state) {
    kplex::CountingSink sink;
    count = kplex::run(g, cfg, sink).count;
  }
  state.counters["plexes"] = static_cast<double>(count);
}
BENCHMARK(BM_Run)
    ->Args({2, 0, 1})
    ->Args({2, 8, 1})
    ->Args({3, 10, 1})
    ->Args({3, 10, 4})
    ->Args({4, 14, 1})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
