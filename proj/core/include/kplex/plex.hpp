#pragma once

#include <atomic>
#include <mutex>
#include <span>
#include <vector>

#include "kplex/graph.hpp"

namespace kplex {

/// True iff every v in s has at most k non-neighbors in s, counting itself.
bool is_kplex(const Graph& g, std::span<const VertexId> s, int k);

/**
 * Receives maximal k-plexes as ascending lists of internal ids.
 *
 * accept() may be called concurrently from several workers; implementations
 * serialize internally.
 */
class PlexSink {
 public:
  virtual ~PlexSink() = default;
  virtual void accept(std::span<const VertexId> plex) = 0;
};

/// Discards plexes. The scheduler still counts them.
class NullSink final : public PlexSink {
 public:
  void accept(std::span<const VertexId>) override {}
};

class CountingSink final : public PlexSink {
 public:
  void accept(std::span<const VertexId>) override { count_.fetch_add(1, std::memory_order_relaxed); }
  std::uint64_t count() const noexcept { return count_.load(); }

 private:
  std::atomic<std::uint64_t> count_{0};
};

/// Stores every plex; intended for tests and small graphs.
class CollectingSink final : public PlexSink {
 public:
  void accept(std::span<const VertexId> plex) override {
    std::lock_guard lock(mutex_);
    plexes_.emplace_back(plex.begin(), plex.end());
  }
  /// Plexes sorted lexicographically. Duplicates are kept.
  std::vector<std::vector<VertexId>> sorted() const;
  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return plexes_.size();
  }

 private:
  mutable std::mutex mutex_;
  std::vector<std::vector<VertexId>> plexes_;
};

}  // namespace kplex
