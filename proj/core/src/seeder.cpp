#include "kplex/seeder.hpp"

#include <algorithm>
#include <numeric>

namespace kplex {
namespace {

// Popcount of bits [lo, hi) in a & b.
std::size_t and_popcount_range(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                               std::size_t lo, std::size_t hi) {
  if (lo >= hi) return 0;
  std::size_t total = 0;
  const std::size_t first = lo / 64;
  const std::size_t last = (hi - 1) / 64;
  for (std::size_t w = first; w <= last; ++w) {
    std::uint64_t word = a[w] & b[w];
    if (w == first) word &= ~std::uint64_t{0} << (lo % 64);
    if (w == last && hi % 64 != 0) word &= (std::uint64_t{1} << (hi % 64)) - 1;
    total += static_cast<std::size_t>(std::popcount(word));
  }
  return total;
}

}  // namespace

SeedGraph::SeedGraph(const Graph& g, VertexId anchor, std::span<const VertexId> one_hop,
                     std::span<const VertexId> two_hop, std::vector<LocalId>& global_to_local) {
  members_.reserve(1 + one_hop.size() + two_hop.size());
  members_.push_back(anchor);
  members_.insert(members_.end(), one_hop.begin(), one_hop.end());
  members_.insert(members_.end(), two_hop.begin(), two_hop.end());
  one_hop_count_ = one_hop.size();

  for (LocalId i = 0; i < members_.size(); ++i) global_to_local[members_[i]] = i;
  offsets_.assign(members_.size() + 1, 0);
  for (LocalId i = 0; i < members_.size(); ++i) {
    const std::size_t begin = targets_.size();
    for (VertexId w : g.neighbors(members_[i])) {
      LocalId lw = global_to_local[w];
      if (lw != kNoLocal) targets_.push_back(lw);
    }
    std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(begin), targets_.end());
    offsets_[i + 1] = targets_.size();
  }
  for (VertexId v : members_) global_to_local[v] = kNoLocal;
  build_rows();
}

void SeedGraph::build_rows() {
  rows_.clear();
  words_per_row_ = 0;
  if (size() > kBitsetLimit) return;
  words_per_row_ = (size() + 63) / 64;
  rows_.assign(size() * words_per_row_, 0);
  for (LocalId v = 0; v < size(); ++v) {
    std::uint64_t* r = rows_.data() + v * words_per_row_;
    for (LocalId w : neighbors(v)) r[w / 64] |= std::uint64_t{1} << (w % 64);
  }
}

bool SeedGraph::adjacent_by_search(LocalId u, LocalId v) const noexcept {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t SeedGraph::common_one_hop_neighbors(LocalId u, LocalId v) const {
  const std::size_t lo = one_hop_begin();
  const std::size_t hi = two_hop_begin();
  if (has_bitset()) return and_popcount_range(row(u), row(v), lo, hi);
  auto a = neighbors(u);
  auto b = neighbors(v);
  std::size_t count = 0;
  auto i = std::lower_bound(a.begin(), a.end(), static_cast<LocalId>(lo));
  auto j = std::lower_bound(b.begin(), b.end(), static_cast<LocalId>(lo));
  while (i != a.end() && j != b.end() && *i < hi && *j < hi) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

SeedGraph SeedGraph::restrict_to(std::span<const std::uint8_t> keep) const {
  std::vector<LocalId> remap(size(), kNoLocal);
  SeedGraph out;
  for (LocalId v = 0; v < size(); ++v) {
    if (v != 0 && !keep[v]) continue;
    remap[v] = static_cast<LocalId>(out.members_.size());
    out.members_.push_back(members_[v]);
    if (is_one_hop(v)) ++out.one_hop_count_;
  }
  out.offsets_.assign(out.members_.size() + 1, 0);
  LocalId next = 0;
  for (LocalId v = 0; v < size(); ++v) {
    if (remap[v] == kNoLocal) continue;
    for (LocalId w : neighbors(v)) {
      if (remap[w] != kNoLocal) out.targets_.push_back(remap[w]);
    }
    out.offsets_[++next] = out.targets_.size();
  }
  out.build_rows();
  return out;
}

SeedGraph build_seed_graph(const Graph& g, VertexId anchor, const Neighborhood& hood,
                           std::vector<LocalId>& global_to_local) {
  return SeedGraph(g, anchor, hood.later_one_hop, hood.later_two_hop, global_to_local);
}

SeedGraph build_seed_graph(const Graph& g, const DegeneracyOrder& ord, std::size_t i) {
  const VertexId anchor = ord.eta[i];
  NeighborhoodScanner scanner(g);
  std::vector<LocalId> global_to_local(g.num_vertices(), kNoLocal);
  return build_seed_graph(g, anchor, scanner.scan(ord, anchor), global_to_local);
}

SeedGraph prune_seed_graph(const SeedGraph& sg, int k, int l) {
  if (l < 2 * k - 1) return sg;
  const long one_hop_min = static_cast<long>(l) - 2L * k;
  const long two_hop_min = one_hop_min + 2;
  const LocalId hi = sg.two_hop_begin();

  std::vector<long> common(sg.size(), 0);
  for (LocalId u = 1; u < sg.size(); ++u) {
    for (LocalId w : sg.neighbors(u)) common[u] += (w >= 1 && w < hi);
  }
  auto too_weak = [&](LocalId u) {
    return common[u] < (sg.is_one_hop(u) ? one_hop_min : two_hop_min);
  };

  std::vector<std::uint8_t> keep(sg.size(), 1);
  std::vector<LocalId> queue;
  for (LocalId u = 1; u < sg.size(); ++u) {
    if (too_weak(u)) {
      keep[u] = 0;
      queue.push_back(u);
    }
  }
  // Only one-hop removals lower anyone's count.
  while (!queue.empty()) {
    LocalId u = queue.back();
    queue.pop_back();
    if (!sg.is_one_hop(u)) continue;
    for (LocalId w : sg.neighbors(u)) {
      if (w == 0 || !keep[w]) continue;
      --common[w];
      if (too_weak(w)) {
        keep[w] = 0;
        queue.push_back(w);
      }
    }
  }
  return sg.restrict_to(keep);
}

bool check_seed_pair(const SeedGraph& sg, LocalId u, LocalId v, int k, int l) {
  const long common = static_cast<long>(sg.common_one_hop_neighbors(u, v));
  const long slack = std::max(k - 3, 0);
  const long bound = sg.adjacent(u, v) ? static_cast<long>(l) - 2L * k - slack
                                       : static_cast<long>(l) - 2L * k + 2 - slack;
  return common >= bound;
}

void for_each_seed_set(const SeedGraph& sg, int k, int l, bool prune_pairs,
                       const std::function<void(std::span<const LocalId>)>& visit) {
  const LocalId lo = sg.two_hop_begin();
  const auto hi = static_cast<LocalId>(sg.size());
  const bool prune = prune_pairs && l >= 2 * k - 1;
  const std::size_t max_size = std::min<std::size_t>(static_cast<std::size_t>(k - 1), hi - lo);
  std::vector<LocalId> chosen;

  auto compatible = [&](LocalId t) {
    if (!prune) return true;
    for (LocalId s : chosen) {
      if (!check_seed_pair(sg, s, t, k, l)) return false;
    }
    return true;
  };

  std::function<void(LocalId, std::size_t)> extend = [&](LocalId start, std::size_t target) {
    if (chosen.size() == target) {
      visit(chosen);
      return;
    }
    const std::size_t still_needed = target - chosen.size();
    for (LocalId t = start; t + still_needed <= hi; ++t) {
      if (!compatible(t)) continue;
      chosen.push_back(t);
      extend(t + 1, target);
      chosen.pop_back();
    }
  };
  for (std::size_t target = 0; target <= max_size; ++target) extend(lo, target);
}

std::vector<SeedSet> enum_seed_sets(const SeedGraph& sg, int k, int l, bool prune_pairs) {
  std::vector<SeedSet> out;
  std::vector<LocalId> candidates(sg.one_hop_count());
  std::iota(candidates.begin(), candidates.end(), sg.one_hop_begin());
  for_each_seed_set(sg, k, l, prune_pairs, [&](std::span<const LocalId> s) {
    SeedSet seed;
    seed.s.assign(s.begin(), s.end());
    seed.candidates = candidates;
    for (LocalId t = sg.two_hop_begin(); t < sg.size(); ++t) {
      if (!std::binary_search(s.begin(), s.end(), t)) seed.excluded.push_back(t);
    }
    out.push_back(std::move(seed));
  });
  return out;
}

BipartiteView build_bipartite(const Graph& g, const SeedGraph& sg,
                              std::span<const VertexId> earlier_one_hop,
                              std::span<const VertexId> earlier_two_hop,
                              std::vector<LocalId>& global_to_local, std::size_t min_edges) {
  BipartiteView bv;
  bv.left.reserve(earlier_one_hop.size() + earlier_two_hop.size());
  bv.left.insert(bv.left.end(), earlier_one_hop.begin(), earlier_one_hop.end());
  bv.left.insert(bv.left.end(), earlier_two_hop.begin(), earlier_two_hop.end());

  std::size_t left_work = 0;
  for (VertexId u : bv.left) left_work += g.degree(u);
  std::size_t right_work = 0;
  for (VertexId r : sg.members()) right_work += g.degree(r);

  std::vector<std::vector<LocalId>> lists(bv.left.size());
  if (left_work <= right_work) {
    for (LocalId r = 0; r < sg.size(); ++r) global_to_local[sg.global(r)] = r;
    for (std::size_t i = 0; i < bv.left.size(); ++i) {
      for (VertexId w : g.neighbors(bv.left[i])) {
        if (global_to_local[w] != kNoLocal) lists[i].push_back(global_to_local[w]);
      }
      std::sort(lists[i].begin(), lists[i].end());
    }
    for (VertexId r : sg.members()) global_to_local[r] = kNoLocal;
  } else {
    for (std::size_t i = 0; i < bv.left.size(); ++i) {
      global_to_local[bv.left[i]] = static_cast<LocalId>(i);
    }
    for (LocalId r = 0; r < sg.size(); ++r) {
      for (VertexId w : g.neighbors(sg.global(r))) {
        if (global_to_local[w] != kNoLocal) lists[global_to_local[w]].push_back(r);
      }
    }
    for (VertexId u : bv.left) global_to_local[u] = kNoLocal;
  }

  std::size_t kept = 0;
  for (std::size_t i = 0; i < bv.left.size(); ++i) {
    if (lists[i].size() < min_edges) continue;
    bv.left[kept++] = bv.left[i];
    bv.edges.insert(bv.edges.end(), lists[i].begin(), lists[i].end());
    bv.offsets.push_back(bv.edges.size());
  }
  bv.left.resize(kept);
  return bv;
}

BipartiteView build_bipartite(const Graph& g, const DegeneracyOrder& ord, const SeedGraph& sg) {
  NeighborhoodScanner scanner(g);
  Neighborhood hood = scanner.scan(ord, sg.anchor());
  std::vector<LocalId> global_to_local(g.num_vertices(), kNoLocal);
  return build_bipartite(g, sg, hood.earlier_one_hop, hood.earlier_two_hop, global_to_local);
}

BipartiteView build_bipartite(const Graph& g, const DegeneracyOrder& ord, std::size_t i) {
  return build_bipartite(g, ord, build_seed_graph(g, ord, i));
}

bool MaximalityChecker::operator()(std::span<const LocalId> p, const SeedGraph& sg,
                                   const BipartiteView& bv, int k) {
  if (in_p_.size() < sg.size()) {
    in_p_.resize(sg.size(), 0);
    saturated_.resize(sg.size(), 0);
  }
  for (LocalId v : p) in_p_[v] = 1;
  const auto size = static_cast<long>(p.size());
  long num_saturated = 0;
  for (LocalId v : p) {
    long inside = 0;
    for (LocalId w : sg.neighbors(v)) inside += in_p_[w];
    if (size - inside == k) {
      saturated_[v] = 1;
      ++num_saturated;
    }
  }
  const long needed = size + 1 - k;
  bool maximal = true;
  for (std::size_t i = 0; maximal && i < bv.left_size(); ++i) {
    auto nb = bv.right_neighbors(i);
    if (static_cast<long>(nb.size()) < needed) continue;
    long hits = 0;
    long saturated_hits = 0;
    for (LocalId r : nb) {
      hits += in_p_[r];
      saturated_hits += saturated_[r];
    }
    if (hits >= needed && saturated_hits == num_saturated) maximal = false;
  }
  for (LocalId v : p) {
    in_p_[v] = 0;
    saturated_[v] = 0;
  }
  return maximal;
}

bool globally_maximal(std::span<const LocalId> p, const SeedGraph& sg, const BipartiteView& bv, int k) {
  MaximalityChecker check;
  return check(p, sg, bv, k);
}

}  // namespace kplex
