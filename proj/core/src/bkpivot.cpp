#include "kplex/bkpivot.hpp"

#include <bit>
#include <cassert>

namespace kplex {
namespace {

void erase_unordered(std::vector<LocalId>& v, LocalId u) {
  auto it = std::find(v.begin(), v.end(), u);
  assert(it != v.end());
  *it = v.back();
  v.pop_back();
}

// |c \ N(v)| given c as a bit mask of `c_size` vertices.
std::uint32_t non_neighbors_in(const SeedGraph& sg, std::span<const std::uint64_t> cbits,
                               std::size_t c_size, LocalId v) {
  std::size_t hits = 0;
  if (sg.has_bitset()) {
    auto row = sg.row(v);
    for (std::size_t w = 0; w < row.size(); ++w) hits += std::popcount(row[w] & cbits[w]);
  } else {
    for (LocalId w : sg.neighbors(v)) hits += (cbits[w / 64] >> (w % 64)) & 1U;
  }
  return static_cast<std::uint32_t>(c_size - hits);
}

std::vector<std::uint64_t> mask_of(std::size_t graph_size, std::span<const LocalId> set) {
  std::vector<std::uint64_t> bits((graph_size + 63) / 64, 0);
  for (LocalId v : set) bits[v / 64] |= std::uint64_t{1} << (v % 64);
  return bits;
}

}  // namespace

SearchState::SearchState(std::size_t graph_size, std::vector<LocalId> candidates,
                         std::vector<LocalId> excluded)
    : c(std::move(candidates)), x(std::move(excluded)), nonadj(graph_size, 0) {}

void SearchState::count_non_neighbors(const SeedGraph& sg, LocalId u, int delta) {
  auto adjust = [&](std::span<const LocalId> set) {
    for (LocalId w : set) {
      if (w == u || !sg.adjacent(u, w)) nonadj[w] += static_cast<std::uint32_t>(delta);
    }
  };
  adjust(p);
  adjust(c);
  adjust(x);
}

void SearchState::include(const SeedGraph& sg, LocalId u) {
  erase_unordered(c, u);
  p.push_back(u);
  count_non_neighbors(sg, u, 1);
}

void SearchState::undo_include(const SeedGraph& sg, LocalId u) {
  assert(!p.empty() && p.back() == u);
  count_non_neighbors(sg, u, -1);
  p.pop_back();
  c.push_back(u);
}

void SearchState::promote(const SeedGraph& sg, LocalId u) {
  erase_unordered(x, u);
  p.push_back(u);
  count_non_neighbors(sg, u, 1);
}

void SearchState::undo_promote(const SeedGraph& sg, LocalId u) {
  assert(!p.empty() && p.back() == u);
  count_non_neighbors(sg, u, -1);
  p.pop_back();
  x.push_back(u);
}

void SearchState::exclude(LocalId u) {
  erase_unordered(c, u);
  x.push_back(u);
}

void SearchState::undo_exclude(LocalId u) {
  // A child's filter may have reordered x, so u need not be last.
  erase_unordered(x, u);
  c.push_back(u);
}

bool SearchState::extendable(const SeedGraph& sg, LocalId v, int k) const {
  if (nonadj[v] + 1 > static_cast<std::uint32_t>(k)) return false;
  for (LocalId w : p) {
    if (nonadj[w] == static_cast<std::uint32_t>(k) && !sg.adjacent(w, v)) return false;
  }
  return true;
}

std::vector<LocalId> filter_extendable(const SeedGraph& sg, const SearchState& st,
                                       std::span<const LocalId> set, int k) {
  std::vector<LocalId> out;
  for (LocalId v : set) {
    if (st.extendable(sg, v, k)) out.push_back(v);
  }
  return out;
}

Pivot select_pivot(const SeedGraph& sg, const SearchState& st) {
  const auto cbits = mask_of(sg.size(), st.c);
  Pivot best;
  auto consider = [&](LocalId v, bool in_p) {
    const std::uint32_t q = st.nonadj[v] + non_neighbors_in(sg, cbits, st.c.size(), v);
    const bool better = best.vertex == kNoLocal || q > best.non_neighbors ||
                        (q == best.non_neighbors && in_p && !best.in_p) ||
                        (q == best.non_neighbors && in_p == best.in_p && v < best.vertex);
    if (better) best = Pivot{v, in_p, q};
  };
  for (LocalId v : st.p) consider(v, true);
  for (LocalId v : st.c) consider(v, false);
  return best;
}

std::vector<LocalId> pivot_non_neighbors(const SeedGraph& sg, const SearchState& st, LocalId pivot) {
  std::vector<LocalId> out;
  for (LocalId w : st.c) {
    if (w != pivot && !sg.adjacent(pivot, w)) out.push_back(w);
  }
  std::sort(out.begin(), out.end(), [&](LocalId a, LocalId b) {
    return st.nonadj[a] != st.nonadj[b] ? st.nonadj[a] < st.nonadj[b] : a < b;
  });
  return out;
}

PivotSearch::PivotSearch(const SeedGraph& sg, int k, std::size_t min_size, Emit emit, Check check)
    : sg_(sg),
      k_(k),
      min_size_(min_size),
      emit_(std::move(emit)),
      check_(std::move(check)),
      cbits_((sg.size() + 63) / 64, 0),
      pc_non_neighbors_(sg.size(), 0) {}

bool PivotSearch::seed(SearchState& st, std::span<const LocalId> s) const {
  std::vector<LocalId> c;
  c.reserve(1 + s.size() + sg_.one_hop_count());
  c.push_back(0);
  c.insert(c.end(), s.begin(), s.end());
  for (LocalId v = sg_.one_hop_begin(); v < sg_.two_hop_begin(); ++v) c.push_back(v);
  std::vector<LocalId> x;
  for (LocalId v = sg_.two_hop_begin(); v < sg_.size(); ++v) {
    if (!std::binary_search(s.begin(), s.end(), v)) x.push_back(v);
  }
  st = SearchState(sg_.size(), std::move(c), std::move(x));
  st.size_bound_l = min_size_;
  st.include(sg_, 0);
  for (LocalId t : s) {
    if (!st.extendable(sg_, t, k_)) return false;
    st.include(sg_, t);
  }
  return true;
}

bool PivotSearch::seed(SearchState& st, const SeedSet& seed_set) const {
  std::vector<LocalId> c{0};
  c.insert(c.end(), seed_set.s.begin(), seed_set.s.end());
  c.insert(c.end(), seed_set.candidates.begin(), seed_set.candidates.end());
  st = SearchState(sg_.size(), std::move(c), seed_set.excluded);
  st.size_bound_l = min_size_;
  st.include(sg_, 0);
  for (LocalId t : seed_set.s) {
    if (!st.extendable(sg_, t, k_)) return false;
    st.include(sg_, t);
  }
  return true;
}

void PivotSearch::run(SearchState& st) { node(st); }

void PivotSearch::run_seed_sets(std::size_t max_seed, const std::function<bool(LocalId, LocalId)>& admit,
                                const std::function<bool()>& stopped) {
  std::vector<LocalId> c{0};
  for (LocalId v = sg_.one_hop_begin(); v < sg_.two_hop_begin(); ++v) c.push_back(v);
  std::vector<LocalId> x;
  for (LocalId v = sg_.two_hop_begin(); v < sg_.size(); ++v) x.push_back(v);
  SearchState st(sg_.size(), std::move(c), std::move(x));
  st.size_bound_l = min_size_;
  st.include(sg_, 0);

  std::vector<LocalId> chosen;
  const auto end = static_cast<LocalId>(sg_.size());
  auto walk = [&](auto&& self, LocalId start) -> void {
    if (stopped && stopped()) return;
    run(st);
    if (chosen.size() == max_seed) return;
    // More seeds only shrink the extendable candidates, and at most
    // max_seed of them join p.
    std::size_t reach = st.p.size() + (max_seed - chosen.size());
    for (LocalId v : st.c) reach += st.extendable(sg_, v, k_) ? 1 : 0;
    if (reach < min_size_) return;
    for (LocalId t = start; t < end; ++t) {
      bool ok = st.extendable(sg_, t, k_);
      for (std::size_t i = 0; ok && i < chosen.size(); ++i) ok = !admit || admit(chosen[i], t);
      if (!ok) continue;
      st.promote(sg_, t);
      chosen.push_back(t);
      self(self, t + 1);
      chosen.pop_back();
      st.undo_promote(sg_, t);
    }
  };
  walk(walk, sg_.two_hop_begin());
}

void PivotSearch::filter(SearchState& st, std::vector<LocalId>& set, std::vector<LocalId>& log) {
  const auto k = static_cast<std::uint32_t>(k_);
  for (std::size_t i = 0; i < set.size();) {
    const LocalId v = set[i];
    bool keep = st.nonadj[v] + 1 <= k;
    for (std::size_t j = 0; keep && j < saturated_.size(); ++j) keep = sg_.adjacent(saturated_[j], v);
    if (keep) {
      ++i;
    } else {
      log.push_back(v);
      set[i] = set.back();
      set.pop_back();
    }
  }
}

// v in x extends p ∪ c; pc_non_neighbors_ and pc_saturated_ describe p ∪ c.
bool PivotSearch::extends_plex(const SearchState& st, LocalId v) const {
  const std::uint32_t outside = st.nonadj[v] + non_neighbors_in(sg_, cbits_, st.c.size(), v);
  if (outside + 1 > static_cast<std::uint32_t>(k_)) return false;
  for (LocalId w : pc_saturated_) {
    if (!sg_.adjacent(w, v)) return false;
  }
  return true;
}

void PivotSearch::try_emit(std::span<const LocalId> members) {
  if (members.size() < min_size_) return;
  std::vector<LocalId> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  if (!check_ || check_(sorted)) emit_(sorted);
}

void PivotSearch::node(SearchState& st) {
  ++nodes_;
  const std::size_t mark_c = log_c_.size();
  const std::size_t mark_x = log_x_.size();
  auto restore = [&] {
    st.c.insert(st.c.end(), log_c_.begin() + static_cast<std::ptrdiff_t>(mark_c), log_c_.end());
    log_c_.resize(mark_c);
    st.x.insert(st.x.end(), log_x_.begin() + static_cast<std::ptrdiff_t>(mark_x), log_x_.end());
    log_x_.resize(mark_x);
  };

  saturated_.clear();
  for (LocalId w : st.p) {
    if (st.nonadj[w] == static_cast<std::uint32_t>(k_)) saturated_.push_back(w);
  }
  filter(st, st.c, log_c_);
  // Too small already, so x does not need filtering.
  if (st.p.size() + st.c.size() < min_size_) {
    restore();
    return;
  }
  filter(st, st.x, log_x_);

  if (st.c.empty()) {
    if (st.x.empty()) try_emit(st.p);
    restore();
    return;
  }

  // Pivot: vertex of p ∪ c with the most non-neighbors there.
  for (LocalId v : st.c) cbits_[v / 64] |= std::uint64_t{1} << (v % 64);
  Pivot pivot;
  auto consider = [&](LocalId v, bool in_p) {
    const std::uint32_t q = st.nonadj[v] + non_neighbors_in(sg_, cbits_, st.c.size(), v);
    pc_non_neighbors_[v] = q;
    const bool better = pivot.vertex == kNoLocal || q > pivot.non_neighbors ||
                        (q == pivot.non_neighbors && in_p && !pivot.in_p) ||
                        (q == pivot.non_neighbors && in_p == pivot.in_p && v < pivot.vertex);
    if (better) pivot = Pivot{v, in_p, q};
  };
  for (LocalId v : st.p) consider(v, true);
  for (LocalId v : st.c) consider(v, false);

  if (pivot.non_neighbors <= static_cast<std::uint32_t>(k_)) {
    // p ∪ c is itself a k-plex.
    pc_saturated_.clear();
    for (LocalId v : st.p) {
      if (pc_non_neighbors_[v] == static_cast<std::uint32_t>(k_)) pc_saturated_.push_back(v);
    }
    for (LocalId v : st.c) {
      if (pc_non_neighbors_[v] == static_cast<std::uint32_t>(k_)) pc_saturated_.push_back(v);
    }
    bool maximal = true;
    for (LocalId v : st.x) {
      if (extends_plex(st, v)) {
        maximal = false;
        break;
      }
    }
    for (LocalId v : st.c) cbits_[v / 64] = 0;
    if (maximal) {
      buffer_.assign(st.p.begin(), st.p.end());
      buffer_.insert(buffer_.end(), st.c.begin(), st.c.end());
      try_emit(buffer_);
    }
    restore();
    return;
  }
  for (LocalId v : st.c) cbits_[v / 64] = 0;

  const bool split = splitter_.spawn && st.c.size() > splitter_.threshold &&
                     splitter_.should_split && splitter_.should_split();
  if (split) {
    branch_on_pivot(sg_, st, pivot, k_, [&](SearchState& child) { splitter_.spawn(child); });
  } else {
    branch_on_pivot(sg_, st, pivot, k_, [&](SearchState& child) { node(child); });
  }
  restore();
}

void bkpivot_search(const SeedGraph& sg, int k, const SeedSet& seed, int l,
                    const PivotSearch::Emit& emit, const PivotSearch::Check& global_check) {
  const std::size_t min_size =
      static_cast<std::size_t>(std::max({l, 2 * k - 1, 1}));
  PivotSearch search(sg, k, min_size, emit, global_check);
  SearchState st;
  if (!search.seed(st, seed)) return;
  search.run(st);
}

}  // namespace kplex
