#pragma once

#include <span>
#include <utility>
#include <vector>

#include "kplex/types.hpp"

namespace kplex {

/**
 * Immutable undirected simple graph in compressed adjacency form.
 *
 * Neighbor lists are strictly ascending by internal id. External labels are
 * kept only for output; every algorithm works on internal ids.
 */
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<EdgeIndex> offsets, std::vector<VertexId> adjacency,
        std::vector<ExternalId> original_ids);

  std::size_t num_vertices() const noexcept { return original_ids_.size(); }
  /// Undirected edge count; each edge counted once.
  std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const noexcept {
    return static_cast<std::size_t>(offsets_[v + 1] - offsets_[v]);
  }
  std::size_t max_degree() const noexcept;

  /// Binary search in the shorter of the two neighbor lists.
  bool adjacent(VertexId u, VertexId v) const noexcept;

  ExternalId original_id(VertexId v) const noexcept { return original_ids_[v]; }
  std::span<const ExternalId> original_ids() const noexcept { return original_ids_; }
  std::span<const EdgeIndex> offsets() const noexcept { return offsets_; }
  std::span<const VertexId> adjacency() const noexcept { return adjacency_; }

  /// Each undirected edge once, as (external, external) with the smaller
  /// internal id first.
  std::vector<std::pair<ExternalId, ExternalId>> edge_list() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<EdgeIndex> offsets_{0};
  std::vector<VertexId> adjacency_;
  std::vector<ExternalId> original_ids_;
};

/// Canonicalizes an arbitrary edge stream: drops self-loops and duplicates,
/// assigns internal ids by first appearance. A vertex that only occurs in a
/// self-loop is kept as an isolated vertex.
Graph build_graph(std::span<const std::pair<ExternalId, ExternalId>> edge_pairs);

/// Vertex permutation produced by repeatedly removing a minimum-degree vertex.
struct DegeneracyOrder {
  std::vector<VertexId> eta;       ///< eta[i] is the i-th removed vertex
  std::vector<VertexId> position;  ///< inverse of eta
  std::vector<VertexId> core;      ///< degree at removal time
  std::size_t degeneracy = 0;

  bool precedes(VertexId u, VertexId v) const noexcept { return position[u] < position[v]; }
};

/// Ties among minimum-degree vertices go to the smallest internal id.
DegeneracyOrder degeneracy_order(const Graph& g);

/// N(v) restricted to vertices after v in the ordering, sorted by position.
std::vector<VertexId> later_neighbors(const Graph& g, const DegeneracyOrder& ord, VertexId v);

/// Vertices at distance exactly two from v that come after v, sorted by position.
std::vector<VertexId> two_hop_later(const Graph& g, const DegeneracyOrder& ord, VertexId v);

/// One- and two-hop neighborhood of a vertex, split by the ordering.
/// All four lists are sorted by position.
struct Neighborhood {
  std::vector<VertexId> earlier_one_hop;
  std::vector<VertexId> earlier_two_hop;
  std::vector<VertexId> later_one_hop;
  std::vector<VertexId> later_two_hop;
};

/**
 * Reusable scratch for neighborhood queries. Holds an n-sized marker array
 * that is restored to all-zero after every call, so one instance per thread
 * serves any number of queries in O(sum of degrees touched).
 */
class NeighborhoodScanner {
 public:
  explicit NeighborhoodScanner(const Graph& g);

  Neighborhood scan(const DegeneracyOrder& ord, VertexId v);

 private:
  const Graph* graph_;
  std::vector<std::uint8_t> mark_;
};

}  // namespace kplex
