#pragma once

#include <bitset>
#include <stdexcept>
#include <vector>

#include "kplex/graph.hpp"

namespace kplex::testing {

/**
 * Second reference enumerator for graphs too large for subset enumeration.
 * Being a k-plex is hereditary, so every k-plex is reached exactly once by
 * adding vertices in ascending id order; each one visited is then tested
 * for maximality against every outside vertex. Cost grows with the number
 * of k-plexes, not with 2^n.
 */
class ReferenceLister {
 public:
  static constexpr std::size_t kMaxVertices = 256;
  using Row = std::bitset<kMaxVertices>;

  ReferenceLister(const Graph& g, int k) : n_(g.num_vertices()), k_(k), adj_(n_), missing_(n_, 0) {
    if (n_ > kMaxVertices) throw std::invalid_argument("graph too large for the reference lister");
    for (VertexId v = 0; v < n_; ++v) {
      for (VertexId w : g.neighbors(v)) adj_[v].set(w);
    }
  }

  /// Maximal k-plexes with at least max(l, 1) vertices, sorted.
  std::vector<std::vector<VertexId>> list(int l) {
    min_size_ = static_cast<std::size_t>(std::max(l, 1));
    out_.clear();
    members_.reset();
    p_.clear();
    std::fill(missing_.begin(), missing_.end(), 0);
    descend(0);
    std::sort(out_.begin(), out_.end());
    return out_;
  }

 private:
  // missing_[v] = |P \ N(v)| with v counted when v is in P.
  bool fits(VertexId v) const {
    if (missing_[v] + 1 > k_) return false;
    for (VertexId w : p_) {
      if (missing_[w] == k_ && !adj_[w][v]) return false;
    }
    return true;
  }

  void add(VertexId v, int delta) {
    for (VertexId w = 0; w < n_; ++w) {
      if (w == v || !adj_[v][w]) missing_[w] += delta;
    }
  }

  void descend(VertexId next) {
    if (!p_.empty() && p_.size() >= min_size_) {
      bool maximal = true;
      for (VertexId v = 0; maximal && v < n_; ++v) {
        if (!members_[v] && fits(v)) maximal = false;
      }
      if (maximal) out_.push_back(p_);
    }
    for (VertexId v = next; v < n_; ++v) {
      if (!fits(v)) continue;
      p_.push_back(v);
      members_.set(v);
      add(v, 1);
      descend(v + 1);
      add(v, -1);
      members_.reset(v);
      p_.pop_back();
    }
  }

  std::size_t n_;
  int k_;
  std::vector<Row> adj_;
  std::vector<int> missing_;
  Row members_;
  std::vector<VertexId> p_;
  std::size_t min_size_ = 1;
  std::vector<std::vector<VertexId>> out_;
};

}  // namespace kplex::testing
