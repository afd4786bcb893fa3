#pragma once

#include <vector>

#include "kplex/graph.hpp"

namespace kplex {

struct OracleResult {
  /// Each plex ascending by vertex id; the list itself sorted.
  std::vector<std::vector<VertexId>> plexes;
  std::size_t count = 0;
};

/// Largest graph brute_list accepts.
inline constexpr std::size_t kOracleMaxVertices = 22;

/**
 * Reference enumerator: walks all 2^n vertex subsets and keeps the maximal
 * k-plexes with at least max(l, 1) vertices. Shares nothing with the engine
 * beyond Graph. Throws ConfigError when n > kOracleMaxVertices or k < 1.
 */
OracleResult brute_list(const Graph& g, int k, int l);

}  // namespace kplex
