#pragma once

#include <bit>
#include <functional>
#include <span>
#include <vector>

#include "kplex/graph.hpp"

namespace kplex {

/**
 * Subgraph induced by an anchor v_i, its later neighbors and its later
 * two-hop neighbors. Local ids are laid out as
 *
 *   0                    anchor
 *   1 .. h1              one-hop members (sorted by position)
 *   h1+1 .. h1+h2        two-hop members (sorted by position)
 *
 * Adjacency is always available as sorted local lists; graphs with at most
 * kBitsetLimit members also carry a bit matrix for O(1) adjacency tests and
 * word-parallel intersections.
 */
class SeedGraph {
 public:
  static constexpr std::size_t kBitsetLimit = 4096;

  SeedGraph() = default;
  /// Builds the induced subgraph of g on the given members. `one_hop` and
  /// `two_hop` must be disjoint and exclude the anchor.
  SeedGraph(const Graph& g, VertexId anchor, std::span<const VertexId> one_hop,
            std::span<const VertexId> two_hop, std::vector<LocalId>& global_to_local);

  std::size_t size() const noexcept { return members_.size(); }
  VertexId anchor() const noexcept { return members_.front(); }
  std::size_t one_hop_count() const noexcept { return one_hop_count_; }
  std::size_t two_hop_count() const noexcept { return size() - 1 - one_hop_count_; }
  LocalId one_hop_begin() const noexcept { return 1; }
  LocalId two_hop_begin() const noexcept { return static_cast<LocalId>(1 + one_hop_count_); }
  bool is_one_hop(LocalId v) const noexcept { return v >= 1 && v < two_hop_begin(); }
  bool is_two_hop(LocalId v) const noexcept { return v >= two_hop_begin(); }

  /// Global id of a local vertex.
  VertexId global(LocalId v) const noexcept { return members_[v]; }
  std::span<const VertexId> members() const noexcept { return members_; }

  std::span<const LocalId> neighbors(LocalId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(LocalId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  bool has_bitset() const noexcept { return words_per_row_ != 0; }
  std::size_t words_per_row() const noexcept { return words_per_row_; }
  std::span<const std::uint64_t> row(LocalId v) const noexcept {
    return {rows_.data() + v * words_per_row_, words_per_row_};
  }

  bool adjacent(LocalId u, LocalId v) const noexcept {
    if (has_bitset()) return (rows_[u * words_per_row_ + v / 64] >> (v % 64)) & 1U;
    return adjacent_by_search(u, v);
  }
  /// |N(u) ∩ N(v) ∩ one_hop|
  std::size_t common_one_hop_neighbors(LocalId u, LocalId v) const;

  /// Subgraph on the members flagged in `keep` (anchor must be kept), with
  /// local ids renumbered in the same relative order.
  SeedGraph restrict_to(std::span<const std::uint8_t> keep) const;

 private:
  void build_rows();
  bool adjacent_by_search(LocalId u, LocalId v) const noexcept;

  std::vector<VertexId> members_;
  std::size_t one_hop_count_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<LocalId> targets_;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Earlier-vertex adjacency into a seed graph: for every u in
/// left = N_<(v_i) ∪ N²_<(v_i), the local ids of N(u) ∩ right, ascending.
struct BipartiteView {
  std::vector<VertexId> left;
  std::vector<std::size_t> offsets{0};
  std::vector<LocalId> edges;

  std::size_t left_size() const noexcept { return left.size(); }
  std::span<const LocalId> right_neighbors(std::size_t left_index) const noexcept {
    return {edges.data() + offsets[left_index], edges.data() + offsets[left_index + 1]};
  }
};

/// P_s = {anchor} ∪ s with candidates one_hop and exclusions two_hop \ s.
struct SeedSet {
  std::vector<LocalId> s;
  std::vector<LocalId> candidates;
  std::vector<LocalId> excluded;
};

/// Anchor is the vertex at position `i` (0-based) of the ordering.
SeedGraph build_seed_graph(const Graph& g, const DegeneracyOrder& ord, std::size_t i);
SeedGraph build_seed_graph(const Graph& g, VertexId anchor, const Neighborhood& hood,
                           std::vector<LocalId>& global_to_local);

/**
 * Drops one-hop members with fewer than l-2k common neighbors with the
 * anchor and two-hop members with fewer than l-2k+2, repeating until no
 * member qualifies. Identity when l < 2k-1.
 */
SeedGraph prune_seed_graph(const SeedGraph& sg, int k, int l);

/// False when the pair (u, v) of two-hop members cannot both belong to a
/// v_i-leaded k-plex of at least l vertices.
bool check_seed_pair(const SeedGraph& sg, LocalId u, LocalId v, int k, int l);

/**
 * Visits every S ⊆ two_hop with |S| <= k-1, by size and then
 * lexicographically on local ids. With `prune_pairs` set (and l >= 2k-1),
 * sets containing a pair rejected by check_seed_pair are skipped.
 */
void for_each_seed_set(const SeedGraph& sg, int k, int l, bool prune_pairs,
                       const std::function<void(std::span<const LocalId>)>& visit);
std::vector<SeedSet> enum_seed_sets(const SeedGraph& sg, int k, int l, bool prune_pairs = true);

BipartiteView build_bipartite(const Graph& g, const DegeneracyOrder& ord, const SeedGraph& sg);
BipartiteView build_bipartite(const Graph& g, const DegeneracyOrder& ord, std::size_t i);
/// Variant that reuses the caller's earlier-neighborhood lists and an
/// all-(-1) scratch array of size n; the scratch is restored on return.
/// Left vertices with fewer than `min_edges` edges into the seed graph are
/// left out (they cannot extend any plex of interest).
BipartiteView build_bipartite(const Graph& g, const SeedGraph& sg,
                              std::span<const VertexId> earlier_one_hop,
                              std::span<const VertexId> earlier_two_hop,
                              std::vector<LocalId>& global_to_local, std::size_t min_edges = 0);

/**
 * True iff no earlier vertex extends p, where p is a k-plex of the seed
 * graph given in local ids. An earlier vertex u extends p exactly when
 * |N(u) ∩ p| >= |p|+1-k and u is adjacent to every member of p that already
 * has k non-neighbors in p.
 */
bool globally_maximal(std::span<const LocalId> p, const SeedGraph& sg, const BipartiteView& bv, int k);

/// globally_maximal with scratch kept between calls.
class MaximalityChecker {
 public:
  bool operator()(std::span<const LocalId> p, const SeedGraph& sg, const BipartiteView& bv, int k);

 private:
  std::vector<std::uint8_t> in_p_;
  std::vector<std::uint8_t> saturated_;
};

}  // namespace kplex
