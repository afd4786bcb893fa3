#include "kplex/plex.hpp"

#include <algorithm>

namespace kplex {

bool is_kplex(const Graph& g, std::span<const VertexId> s, int k) {
  for (VertexId v : s) {
    int missing = 0;
    for (VertexId u : s) {
      if (u == v || !g.adjacent(u, v)) ++missing;
    }
    if (missing > k) return false;
  }
  return true;
}

std::vector<std::vector<VertexId>> CollectingSink::sorted() const {
  std::lock_guard lock(mutex_);
  auto out = plexes_;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kplex
