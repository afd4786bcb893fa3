#include "kplex/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace kplex {
namespace {

using Mask = std::uint32_t;

bool plex_mask(std::span<const Mask> closed, Mask s, int k) {
  for (Mask rest = s; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if (std::popcount(s & ~closed[v]) + 1 > k) return false;
  }
  return true;
}

}  // namespace

OracleResult brute_list(const Graph& g, int k, int l) {
  const std::size_t n = g.num_vertices();
  if (k < 1) throw ConfigError("k must be at least 1");
  if (n > kOracleMaxVertices) {
    throw ConfigError("oracle refuses graphs with more than " + std::to_string(kOracleMaxVertices) +
                      " vertices (got " + std::to_string(n) + ")");
  }
  // closed[v] = N(v) ∪ {v}; a set s is a k-plex iff |s \ closed[v]| + 1 <= k
  // for every v in s, i.e. v misses at most k members counting itself.
  std::vector<Mask> closed(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    closed[v] = Mask{1} << v;
    for (VertexId w : g.neighbors(v)) closed[v] |= Mask{1} << w;
  }
  const int min_size = std::max(l, 1);
  const Mask all = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);

  OracleResult out;
  for (std::uint64_t raw = 1; raw <= all; ++raw) {
    const Mask s = static_cast<Mask>(raw);
    if (std::popcount(s) < min_size) continue;
    if (!plex_mask(closed, s, k)) continue;
    bool maximal = true;
    for (Mask rest = all & ~s; maximal && rest != 0; rest &= rest - 1) {
      const Mask v = Mask{1} << std::countr_zero(rest);
      if (plex_mask(closed, s | v, k)) maximal = false;
    }
    if (!maximal) continue;
    std::vector<VertexId> plex;
    for (Mask rest = s; rest != 0; rest &= rest - 1) plex.push_back(static_cast<VertexId>(std::countr_zero(rest)));
    out.plexes.push_back(std::move(plex));
  }
  std::sort(out.plexes.begin(), out.plexes.end());
  out.count = out.plexes.size();
  return out;
}

}  // namespace kplex
