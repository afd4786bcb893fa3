#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <utility>
#include <vector>

#include "kplex/graph.hpp"

namespace kplex {

struct GraphStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  std::size_t degeneracy = 0;

  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

/**
 * Parses a whitespace-separated edge list.
 *
 * Lines starting with '#' or '%' and blank lines are skipped. Every other
 * line must start with two non-negative integers; anything after them is
 * ignored. Throws ParseError naming the 1-based line number otherwise.
 */
std::vector<std::pair<ExternalId, ExternalId>> parse_edge_list(std::string_view text);
std::vector<std::pair<ExternalId, ExternalId>> parse_edge_list(std::istream& in);

/// Reads and parses a file. Throws IoError if it cannot be read.
Graph load(const std::filesystem::path& path);

GraphStats stats(const Graph& g);

}  // namespace kplex
