#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "kplex/graph.hpp"
#include "kplex/scheduler.hpp"

namespace kplex::testing {

using PlexList = std::vector<std::vector<VertexId>>;

inline Graph graph_of(std::initializer_list<std::pair<ExternalId, ExternalId>> edges) {
  std::vector<std::pair<ExternalId, ExternalId>> v(edges);
  return build_graph(v);
}

/// Erdos-Renyi G(n, p) on external ids 0..n-1. Isolated vertices are kept
/// through self-loops, so the graph always has exactly n vertices and
/// internal id i is external id i.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<ExternalId, ExternalId>> edges;
  for (ExternalId v = 0; v < n; ++v) edges.emplace_back(v, v);
  for (ExternalId u = 0; u < n; ++u) {
    for (ExternalId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return build_graph(edges);
}

/// Every subgraph of the complete graph on n vertices, indexed by an edge
/// bitmask over the pairs (u, v), u < v, in lexicographic order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::pair<ExternalId, ExternalId>> edges;
  for (ExternalId v = 0; v < n; ++v) edges.emplace_back(v, v);
  std::size_t bit = 0;
  for (ExternalId u = 0; u < n; ++u) {
    for (ExternalId v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) edges.emplace_back(u, v);
    }
  }
  return build_graph(edges);
}

/// Engine output as a sorted list of sorted plexes.
inline PlexList engine_plexes(const Graph& g, const RunConfig& cfg) {
  CollectingSink sink;
  run(g, cfg, sink);
  return sink.sorted();
}

inline std::filesystem::path data_dir() { return KPLEX_TEST_DATA_DIR; }

/// Every graph on one to seven vertices up to isomorphism (1252 graphs),
/// read from the atlas fixture. Vertex i has internal id i.
inline std::vector<Graph> graph_atlas() {
  std::ifstream in(data_dir() / "atlas7.txt");
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::size_t n = 0;
    fields >> n;
    std::vector<std::pair<ExternalId, ExternalId>> edges;
    for (ExternalId v = 0; v < n; ++v) edges.emplace_back(v, v);
    ExternalId u = 0;
    ExternalId v = 0;
    while (fields >> u >> v) edges.emplace_back(u, v);
    out.push_back(build_graph(edges));
  }
  return out;
}

}  // namespace kplex::testing
