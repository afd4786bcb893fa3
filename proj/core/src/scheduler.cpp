#include "kplex/scheduler.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <exception>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "kplex/bkpivot.hpp"
#include "kplex/seeder.hpp"

namespace kplex {

void validate(const RunConfig& cfg) {
  if (cfg.k < 1) throw ConfigError("k must be at least 1");
  if (cfg.l < 0) throw ConfigError("minimum size must be non-negative");
  if (cfg.l > 0 && cfg.l < 2 * cfg.k - 1) {
    throw ConfigError("minimum size l=" + std::to_string(cfg.l) + " violates l >= 2k-1 = " +
                      std::to_string(2 * cfg.k - 1));
  }
  if (cfg.threads < 1) throw ConfigError("threads must be at least 1");
  if (cfg.split_threshold < 1) throw ConfigError("split threshold must be at least 1");
}

EmitTally count_reduce(std::span<const WorkerTally> partials) {
  EmitTally total;
  for (const auto& w : partials) {
    total.count += w.emitted.count;
    total.max_size = std::max(total.max_size, w.emitted.max_size);
  }
  return total;
}

namespace {

// Everything one anchor's searches share. Read-only once built, except for
// the bipartite view, which is built on first use.
struct AnchorContext {
  SeedGraph sg;
  std::vector<VertexId> earlier_one_hop;
  std::vector<VertexId> earlier_two_hop;
  std::once_flag bipartite_once;
  BipartiteView bv;
};

struct Subtask {
  std::shared_ptr<AnchorContext> ctx;
  SearchState state;
};

class Engine {
 public:
  Engine(const Graph& g, const DegeneracyOrder& ord, const RunConfig& cfg, PlexSink& sink)
      : g_(g),
        ord_(ord),
        cfg_(cfg),
        sink_(sink),
        large_(cfg.l > 0),
        min_size_(static_cast<std::size_t>(std::max(cfg.l, 2 * cfg.k - 1))),
        workers_(static_cast<std::size_t>(cfg.threads)) {}

  std::vector<WorkerTally> run() {
    if (workers_.size() == 1) {
      loop(0);
    } else {
      std::vector<std::thread> threads;
      threads.reserve(workers_.size());
      for (std::size_t w = 0; w < workers_.size(); ++w) threads.emplace_back([this, w] { loop(w); });
      for (auto& t : threads) t.join();
    }
    if (error_) std::rethrow_exception(error_);
    std::vector<WorkerTally> out;
    for (auto& w : workers_) out.push_back(w.tally);
    return out;
  }

 private:
  struct Worker {
    std::mutex mutex;
    std::deque<Subtask> deque;
    WorkerTally tally;
    std::unique_ptr<NeighborhoodScanner> scanner;
    std::vector<LocalId> global_to_local;
    MaximalityChecker checker;
    std::vector<VertexId> emit_buffer;
  };

  enum class Acquired { kNone, kSubtask, kAnchor };

  void loop(std::size_t w) {
    Worker& self = workers_[w];
    self.scanner = std::make_unique<NeighborhoodScanner>(g_);
    self.global_to_local.assign(g_.num_vertices(), kNoLocal);
    bool idle = false;
    while (!stop_.load(std::memory_order_relaxed)) {
      Subtask task;
      std::size_t anchor = 0;
      const Acquired got = acquire(w, task, anchor);
      if (got == Acquired::kNone) {
        if (!idle) {
          idle = true;
          idle_.fetch_add(1);
        }
        if (anchors_done_.load() && outstanding_.load() == 0) break;
        std::this_thread::yield();
        continue;
      }
      if (idle) {
        idle = false;
        idle_.fetch_sub(1);
      }
      try {
        if (got == Acquired::kAnchor) {
          run_anchor(w, anchor);
          ++self.tally.anchors_run;
        } else {
          run_subtask(w, task);
          ++self.tally.subtasks_run;
        }
      } catch (...) {
        std::lock_guard lock(error_mutex_);
        if (!error_) error_ = std::current_exception();
        stop_.store(true);
      }
      outstanding_.fetch_sub(1);
    }
    if (idle) idle_.fetch_sub(1);
  }

  Acquired acquire(std::size_t w, Subtask& task, std::size_t& anchor) {
    {
      Worker& self = workers_[w];
      std::lock_guard lock(self.mutex);
      if (!self.deque.empty()) {
        task = std::move(self.deque.back());
        self.deque.pop_back();
        return Acquired::kSubtask;
      }
    }
    for (std::size_t i = 1; i < workers_.size(); ++i) {
      Worker& victim = workers_[(w + i) % workers_.size()];
      std::lock_guard lock(victim.mutex);
      if (!victim.deque.empty()) {
        task = std::move(victim.deque.front());
        victim.deque.pop_front();
        return Acquired::kSubtask;
      }
    }
    if (!anchors_done_.load()) {
      // Count the claim before taking it so an empty queue plus zero
      // outstanding work really means nothing is left.
      outstanding_.fetch_add(1);
      const std::size_t a = next_anchor_.fetch_add(1);
      if (a < g_.num_vertices()) {
        anchor = a;
        return Acquired::kAnchor;
      }
      anchors_done_.store(true);
      outstanding_.fetch_sub(1);
    }
    return Acquired::kNone;
  }

  void run_anchor(std::size_t w, std::size_t position) {
    Worker& self = workers_[w];
    const VertexId v = ord_.eta[position];
    Neighborhood hood = self.scanner->scan(ord_, v);
    if (1 + hood.later_one_hop.size() + hood.later_two_hop.size() < min_size_) return;

    auto ctx = std::make_shared<AnchorContext>();
    ctx->sg = build_seed_graph(g_, v, hood, self.global_to_local);
    if (large_ && cfg_.prune1) ctx->sg = prune_seed_graph(ctx->sg, cfg_.k, cfg_.l);
    if (ctx->sg.size() < min_size_) return;
    ctx->earlier_one_hop = std::move(hood.earlier_one_hop);
    ctx->earlier_two_hop = std::move(hood.earlier_two_hop);

    PivotSearch search = make_search(w, ctx);
    const bool prune_pairs = large_ && cfg_.prune2;
    const SeedGraph& sg = ctx->sg;
    search.run_seed_sets(
        std::min(static_cast<std::size_t>(cfg_.k - 1), sg.two_hop_count()),
        [&](LocalId s, LocalId t) { return !prune_pairs || check_seed_pair(sg, s, t, cfg_.k, cfg_.l); },
        [this] { return stop_.load(std::memory_order_relaxed); });
  }

  void run_subtask(std::size_t w, Subtask& task) {
    PivotSearch search = make_search(w, task.ctx);
    search.run(task.state);
  }

  PivotSearch make_search(std::size_t w, const std::shared_ptr<AnchorContext>& ctx) {
    AnchorContext* c = ctx.get();
    auto emit = [this, w, c](std::span<const LocalId> plex) {
      Worker& self = workers_[w];
      self.emit_buffer.clear();
      for (LocalId v : plex) self.emit_buffer.push_back(c->sg.global(v));
      std::sort(self.emit_buffer.begin(), self.emit_buffer.end());
      if (!cfg_.count_only) sink_.accept(self.emit_buffer);
      self.tally.emitted.record(plex.size());
    };
    auto check = [this, w, c](std::span<const LocalId> plex) {
      Worker& self = workers_[w];
      std::call_once(c->bipartite_once, [&] {
        const std::size_t min_edges = min_size_ + 1 > static_cast<std::size_t>(cfg_.k)
                                          ? min_size_ + 1 - static_cast<std::size_t>(cfg_.k)
                                          : 0;
        c->bv = build_bipartite(g_, c->sg, c->earlier_one_hop, c->earlier_two_hop,
                                self.global_to_local, min_edges);
      });
      return self.checker(plex, c->sg, c->bv, cfg_.k);
    };
    PivotSearch search(c->sg, cfg_.k, min_size_, std::move(emit), std::move(check));
    if (workers_.size() > 1) {
      PivotSearch::Splitter splitter;
      splitter.threshold = cfg_.split_threshold;
      splitter.should_split = [this] { return idle_.load(std::memory_order_relaxed) > 0; };
      splitter.spawn = [this, w, ctx](const SearchState& child) {
        outstanding_.fetch_add(1);
        ++workers_[w].tally.subtasks_spawned;
        Worker& self = workers_[w];
        std::lock_guard lock(self.mutex);
        self.deque.push_back(Subtask{ctx, child});
      };
      search.set_splitter(std::move(splitter));
    }
    return search;
  }

  const Graph& g_;
  const DegeneracyOrder& ord_;
  const RunConfig& cfg_;
  PlexSink& sink_;
  const bool large_;
  const std::size_t min_size_;
  std::vector<Worker> workers_;

  std::atomic<std::size_t> next_anchor_{0};
  std::atomic<bool> anchors_done_{false};
  std::atomic<std::int64_t> outstanding_{0};
  std::atomic<int> idle_{0};
  std::atomic<bool> stop_{false};
  std::mutex error_mutex_;
  std::exception_ptr error_;
};

}  // namespace

RunSummary run(const Graph& g, const RunConfig& cfg, PlexSink& sink) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  RunSummary summary;

  if (cfg.l == 0) {
    NullSink discard;
    const EmitTally small = list_small_plexes(g, cfg.k, cfg.count_only ? static_cast<PlexSink&>(discard) : sink);
    summary.count += small.count;
    summary.max_size = std::max(summary.max_size, small.max_size);
  }

  const DegeneracyOrder ord = degeneracy_order(g);
  Engine engine(g, ord, cfg, sink);
  const auto partials = engine.run();
  const EmitTally large = count_reduce(partials);
  summary.count += large.count;
  summary.max_size = std::max(summary.max_size, large.max_size);
  for (const auto& p : partials) {
    summary.anchors_run += p.anchors_run;
    summary.subtasks_spawned += p.subtasks_spawned;
    summary.subtasks_run += p.subtasks_run;
  }
  summary.elapsed = std::chrono::steady_clock::now() - start;
  return summary;
}

}  // namespace kplex
