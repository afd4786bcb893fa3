#include "kplex/smallplex.hpp"

#include <algorithm>

namespace kplex {
namespace {

class SmallPlexLister {
 public:
  SmallPlexLister(const Graph& g, int k, PlexSink& sink)
      : g_(g),
        k_(k),
        cap_(static_cast<std::size_t>(2 * k - 2)),
        sink_(sink),
        adjcnt_(g.num_vertices(), 0),
        in_p_(g.num_vertices(), 0),
        seen_(g.num_vertices(), 0),
        ext_(cap_ + 1) {}

  EmitTally run() {
    if (cap_ == 0) return tally_;
    const auto n = static_cast<VertexId>(g_.num_vertices());
    for (VertexId u = 0; u < n; ++u) descend(u);
    return tally_;
  }

 private:
  void descend(VertexId u) {
    p_.push_back(u);
    in_p_[u] = 1;
    for (VertexId w : g_.neighbors(u)) ++adjcnt_[w];
    visit();
    for (VertexId w : g_.neighbors(u)) --adjcnt_[w];
    in_p_[u] = 0;
    p_.pop_back();
  }

  void visit() {
    const std::size_t s = p_.size();
    if (s < static_cast<std::size_t>(k_)) {
      // Every vertex outside P extends it.
      if (s == g_.num_vertices()) {
        emit();
        return;
      }
      if (s == cap_) return;
      const auto n = static_cast<VertexId>(g_.num_vertices());
      for (VertexId u = p_.back() + 1; u < n; ++u) descend(u);
      return;
    }

    collect_saturated();
    auto& ext = ext_[s];
    ext.clear();
    const bool need_all = s < cap_;
    if (s == static_cast<std::size_t>(k_)) {
      gather_extensions(ext, need_all);
    } else {
      for (VertexId w : ext_[s - 1]) {
        if (w != p_.back() && extendable(w)) {
          ext.push_back(w);
          if (!need_all) break;
        }
      }
    }

    if (ext.empty()) {
      emit();
      return;
    }
    if (s == cap_) return;
    // ext_[s] is reused by deeper levels only at index > s.
    for (VertexId u : ext) {
      if (u > p_.back()) descend(u);
    }
  }

  void collect_saturated() {
    saturated_.clear();
    const auto s = static_cast<std::uint32_t>(p_.size());
    for (VertexId q : p_) {
      if (s - adjcnt_[q] == static_cast<std::uint32_t>(k_)) saturated_.push_back(q);
    }
  }

  bool extendable(VertexId w) const {
    const auto s = static_cast<std::int64_t>(p_.size());
    if (s - adjcnt_[w] + 1 > k_) return false;
    for (VertexId t : saturated_) {
      if (!g_.adjacent(t, w)) return false;
    }
    return true;
  }

  // P has exactly k members, so any extension is adjacent to at least one of
  // them, and to every saturated one.
  void gather_extensions(std::vector<VertexId>& ext, bool need_all) {
    if (!saturated_.empty()) {
      VertexId src = *std::min_element(saturated_.begin(), saturated_.end(),
                                       [&](VertexId a, VertexId b) { return g_.degree(a) < g_.degree(b); });
      for (VertexId w : g_.neighbors(src)) {
        if (!in_p_[w] && extendable(w)) {
          ext.push_back(w);
          if (!need_all) return;
        }
      }
      return;
    }
    for (VertexId q : p_) {
      for (VertexId w : g_.neighbors(q)) {
        if (in_p_[w] || seen_[w]) continue;
        seen_[w] = 1;
        touched_.push_back(w);
        if (extendable(w)) {
          ext.push_back(w);
          if (!need_all) break;
        }
      }
      if (!need_all && !ext.empty()) break;
    }
    for (VertexId w : touched_) seen_[w] = 0;
    touched_.clear();
    std::sort(ext.begin(), ext.end());
  }

  void emit() {
    sink_.accept(p_);
    tally_.record(p_.size());
  }

  const Graph& g_;
  int k_;
  std::size_t cap_;
  PlexSink& sink_;
  std::vector<VertexId> p_;
  std::vector<std::uint32_t> adjcnt_;
  std::vector<std::uint8_t> in_p_;
  std::vector<std::uint8_t> seen_;
  std::vector<VertexId> touched_;
  std::vector<VertexId> saturated_;
  std::vector<std::vector<VertexId>> ext_;
  EmitTally tally_;
};

}  // namespace

EmitTally list_small_plexes(const Graph& g, int k, PlexSink& sink) {
  if (k < 1) throw ConfigError("k must be at least 1");
  return SmallPlexLister(g, k, sink).run();
}

}  // namespace kplex
