#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <vector>

#include "kplex/seeder.hpp"

namespace kplex {

/**
 * Disjoint in-plex (p), candidate (c) and excluded (x) sets over the local
 * ids of one seed graph.
 *
 * nonadj[v] = |p \ N(v)|, which counts v itself when v is in p. Counters
 * are maintained for every vertex currently in p ∪ c ∪ x; include() and
 * undo_include() must be strictly nested.
 */
struct SearchState {
  std::vector<LocalId> p;
  std::vector<LocalId> c;
  std::vector<LocalId> x;
  std::vector<std::uint32_t> nonadj;
  std::size_t size_bound_l = 0;

  /// Empty p, everything in c ∪ x.
  SearchState(std::size_t graph_size, std::vector<LocalId> candidates, std::vector<LocalId> excluded);
  SearchState() = default;

  /// Moves u from c to p.
  void include(const SeedGraph& sg, LocalId u);
  void undo_include(const SeedGraph& sg, LocalId u);
  /// Moves u from x to p.
  void promote(const SeedGraph& sg, LocalId u);
  void undo_promote(const SeedGraph& sg, LocalId u);
  /// Moves u from c to x.
  void exclude(LocalId u);
  void undo_exclude(LocalId u);

  /// G[p ∪ {v}] is a k-plex.
  bool extendable(const SeedGraph& sg, LocalId v, int k) const;
  bool in_p(LocalId v) const { return std::find(p.begin(), p.end(), v) != p.end(); }

 private:
  void count_non_neighbors(const SeedGraph& sg, LocalId u, int delta);
};

struct Pivot {
  LocalId vertex = kNoLocal;
  bool in_p = false;
  /// Non-neighbors of the pivot within p ∪ c, counting itself.
  std::uint32_t non_neighbors = 0;
};

/// Members of `set` that can join p without breaking the k-plex property.
std::vector<LocalId> filter_extendable(const SeedGraph& sg, const SearchState& st,
                                       std::span<const LocalId> set, int k);

/// Minimum-degree vertex of G[p ∪ c]; ties prefer p, then the smallest id.
Pivot select_pivot(const SeedGraph& sg, const SearchState& st);

/// Order in which the pivot's candidate non-neighbors are branched on.
std::vector<LocalId> pivot_non_neighbors(const SeedGraph& sg, const SearchState& st, LocalId pivot);

/**
 * Generates the children of a node whose pivot has more than k
 * non-neighbors in p ∪ c, calling descend(st) once per child with st
 * holding the child's sets. st is restored before returning.
 *
 * Pivot in c: exclude it, then include it.
 * Pivot in p with q1 = nonadj[pivot], k' = k - q1 and u_1..u_q2 the
 * candidates it is not adjacent to: branch i < k'+1 includes u_1..u_{i-1}
 * and excludes u_i; the last branch includes u_1..u_k' and excludes the
 * rest. Branches that would include a vertex no longer extendable are
 * empty and skipped.
 */
template <class Descend>
void branch_on_pivot(const SeedGraph& sg, SearchState& st, const Pivot& pivot, int k, Descend&& descend) {
  const LocalId up = pivot.vertex;
  if (!pivot.in_p) {
    st.exclude(up);
    descend(st);
    st.undo_exclude(up);
    st.include(sg, up);
    descend(st);
    st.undo_include(sg, up);
    return;
  }

  const std::vector<LocalId> us = pivot_non_neighbors(sg, st, up);
  const std::size_t kprime = static_cast<std::size_t>(k) - st.nonadj[up];
  std::size_t included = 0;
  bool alive = true;
  for (std::size_t i = 0; i < kprime && i < us.size(); ++i) {
    st.exclude(us[i]);
    descend(st);
    st.undo_exclude(us[i]);
    if (!st.extendable(sg, us[i], k)) {
      alive = false;
      break;
    }
    st.include(sg, us[i]);
    ++included;
  }
  if (alive) {
    for (std::size_t j = kprime; j < us.size(); ++j) st.exclude(us[j]);
    descend(st);
    for (std::size_t j = us.size(); j > kprime; --j) st.undo_exclude(us[j - 1]);
  }
  while (included > 0) st.undo_include(sg, us[--included]);
}

/**
 * Recursive pivot search over one seed graph. A PivotSearch owns scratch
 * sized to the seed graph and is reused across seed sets of one anchor.
 */
class PivotSearch {
 public:
  /// Receives each qualifying plex as ascending local ids.
  using Emit = std::function<void(std::span<const LocalId>)>;
  /// Global maximality test on ascending local ids.
  using Check = std::function<bool(std::span<const LocalId>)>;

  /// Hands a child state to another worker. Called only when
  /// |c| > split_threshold and should_split() reports idle capacity.
  struct Splitter {
    std::size_t threshold = 10;
    std::function<bool()> should_split;
    std::function<void(const SearchState&)> spawn;
  };

  PivotSearch(const SeedGraph& sg, int k, std::size_t min_size, Emit emit, Check check);

  void set_splitter(Splitter splitter) { splitter_ = std::move(splitter); }

  /// Runs the search from st (p must already be a k-plex).
  void run(SearchState& st);

  /// Sets up p = {anchor} ∪ s, c = one_hop, x = two_hop \ s. Returns false
  /// when {anchor} ∪ s is not a k-plex.
  bool seed(SearchState& st, std::span<const LocalId> s) const;
  /// Same, with the seed set's own candidate and excluded lists.
  bool seed(SearchState& st, const SeedSet& seed_set) const;

  /**
   * Runs the search once per seed set S: every S of at most max_seed
   * two-hop vertices whose pairs all pass `admit` and for which
   * {anchor} ∪ S is a k-plex. Seed sets are walked depth first, adding one
   * vertex at a time, so sets that share a prefix share its updates and a
   * prefix that fails ends the walk below it. Stops early once `stopped`
   * returns true.
   */
  void run_seed_sets(std::size_t max_seed, const std::function<bool(LocalId, LocalId)>& admit,
                     const std::function<bool()>& stopped = {});

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void node(SearchState& st);
  void filter(SearchState& st, std::vector<LocalId>& set, std::vector<LocalId>& log);
  void try_emit(std::span<const LocalId> members);
  bool extends_plex(const SearchState& st, LocalId v) const;

  const SeedGraph& sg_;
  int k_;
  std::size_t min_size_;
  Emit emit_;
  Check check_;
  Splitter splitter_;

  std::vector<LocalId> log_c_;
  std::vector<LocalId> log_x_;
  std::vector<LocalId> saturated_;
  std::vector<std::uint64_t> cbits_;
  std::vector<std::uint32_t> pc_non_neighbors_;
  std::vector<LocalId> pc_saturated_;
  std::vector<LocalId> buffer_;
  std::uint64_t nodes_ = 0;
};

/**
 * Lists the maximal k-plexes of the seed graph that contain {anchor} ∪ S,
 * draw the rest from one_hop and avoid two_hop \ S. Each plex with more
 * than 2k-2 vertices and at least l vertices that passes global_check is
 * passed to emit.
 */
void bkpivot_search(const SeedGraph& sg, int k, const SeedSet& seed, int l,
                    const PivotSearch::Emit& emit, const PivotSearch::Check& global_check);

}  // namespace kplex
