#pragma once

#include <chrono>
#include <cstdint>
#include <span>

#include "kplex/graph.hpp"
#include "kplex/plex.hpp"
#include "kplex/smallplex.hpp"

namespace kplex {

struct RunConfig {
  int k = 2;
  /// Minimum plex size; 0 lists every maximal k-plex.
  int l = 0;
  int threads = 1;
  /// A search node with more candidates than this may hand children to
  /// idle workers.
  std::size_t split_threshold = 10;
  bool prune1 = true;
  bool prune2 = true;
  bool count_only = false;
};

/// Throws ConfigError when the configuration is unusable.
void validate(const RunConfig& cfg);

struct RunSummary {
  std::uint64_t count = 0;
  std::size_t max_size = 0;
  std::chrono::duration<double, std::milli> elapsed{0};
  std::uint64_t anchors_run = 0;
  std::uint64_t subtasks_spawned = 0;
  std::uint64_t subtasks_run = 0;
};

/// Per-worker emission counters.
struct WorkerTally {
  EmitTally emitted;
  std::uint64_t anchors_run = 0;
  std::uint64_t subtasks_spawned = 0;
  std::uint64_t subtasks_run = 0;
};

EmitTally count_reduce(std::span<const WorkerTally> partials);

/**
 * Lists maximal k-plexes of g into sink.
 *
 * With l = 0 the small plexes (at most 2k-2 vertices) are listed first on
 * the calling thread, then every anchor of the degeneracy order runs as a
 * task on `threads` workers. With l >= 2k-1 only anchor tasks run, with the
 * seed-graph and seed-pair prune rules enabled by the config toggles.
 *
 * Workers own a deque each: they pop their own newest task, steal the
 * oldest task of another worker, and otherwise claim the next anchor in
 * ordering position. A running search whose candidate set exceeds
 * split_threshold while some worker is idle pushes its children as
 * stealable subtasks that share the anchor's seed graph.
 */
RunSummary run(const Graph& g, const RunConfig& cfg, PlexSink& sink);

}  // namespace kplex
