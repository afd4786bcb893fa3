#pragma once

#include <cstdint>

#include "kplex/graph.hpp"
#include "kplex/plex.hpp"

namespace kplex {

struct EmitTally {
  std::uint64_t count = 0;
  std::size_t max_size = 0;

  void record(std::size_t size) noexcept {
    ++count;
    if (size > max_size) max_size = size;
  }
};

/**
 * Lists every maximal k-plex of g with at most 2k-2 vertices.
 *
 * Bron-Kerbosch without pivoting: vertices are added in ascending id order,
 * so a node is identified by its set P and its candidates are the
 * extensions of P above max(P). Branches stop at |P| = 2k-2; a node at the
 * cap that still has an extension is not maximal.
 *
 * While |P| < k every outside vertex extends P, so extension sets are kept
 * implicit until P first reaches k vertices and are then gathered from the
 * neighborhood of a saturated member (or of all members if none is
 * saturated).
 */
EmitTally list_small_plexes(const Graph& g, int k, PlexSink& sink);

}  // namespace kplex
