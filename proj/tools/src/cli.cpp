#include "kplex/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "kplex/ingest.hpp"
#include "kplex/oracle.hpp"
#include "kplex/scheduler.hpp"

namespace kplex::cli {
namespace {

struct Options {
  std::string input;
  int k = 0;
  int min_size = 0;
  int threads = 1;
  bool count_only = false;
  std::string output;
  bool sorted = false;
  bool no_prune1 = false;
  bool no_prune2 = false;
  std::size_t split_threshold = 10;
  bool stats = false;
  bool oracle = false;
};

void append_line(std::string& out, std::span<const ExternalId> ids) {
  char buf[24];
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out.push_back(' ');
    const auto res = std::to_chars(buf, buf + sizeof buf, ids[i]);
    out.append(buf, res.ptr);
  }
  out.push_back('\n');
}

// Writes each plex as a line of external ids. Workers format into a
// thread-local block and only take the lock to hand a full block over.
class LineSink final : public PlexSink {
 public:
  static constexpr std::size_t kBlock = 1 << 20;

  LineSink(const Graph& g, std::ostream& out) : graph_(g), out_(out), id_(next_id_.fetch_add(1)) {}
  ~LineSink() override = default;

  void accept(std::span<const VertexId> plex) override {
    Local& local = local_for_thread();
    local.ids.clear();
    for (VertexId v : plex) local.ids.push_back(graph_.original_id(v));
    std::sort(local.ids.begin(), local.ids.end());
    append_line(local.text, local.ids);
    if (local.text.size() >= kBlock) flush(local);
  }

  void finish() {
    std::lock_guard lock(registry_mutex_);
    for (auto& local : locals_) {
      std::lock_guard out_lock(out_mutex_);
      out_ << local->text;
      local->text.clear();
    }
    out_.flush();
  }

 private:
  struct Local {
    std::vector<ExternalId> ids;
    std::string text;
  };

  Local& local_for_thread() {
    // Keyed by a per-sink id rather than the address, which a later sink
    // may reuse.
    thread_local std::uint64_t owner = 0;
    thread_local Local* local = nullptr;
    if (owner != id_) {
      std::lock_guard lock(registry_mutex_);
      locals_.push_back(std::make_unique<Local>());
      local = locals_.back().get();
      owner = id_;
    }
    return *local;
  }

  void flush(Local& local) {
    std::lock_guard lock(out_mutex_);
    out_ << local.text;
    local.text.clear();
  }

  const Graph& graph_;
  std::ostream& out_;
  std::mutex out_mutex_;
  std::mutex registry_mutex_;
  std::vector<std::unique_ptr<Local>> locals_;
  const std::uint64_t id_;
  static inline std::atomic<std::uint64_t> next_id_{1};
};

// Keeps every plex in external ids so the output can be sorted first.
class SortingSink final : public PlexSink {
 public:
  explicit SortingSink(const Graph& g) : graph_(g) {}

  void accept(std::span<const VertexId> plex) override {
    std::vector<ExternalId> ids;
    ids.reserve(plex.size());
    for (VertexId v : plex) ids.push_back(graph_.original_id(v));
    std::sort(ids.begin(), ids.end());
    std::lock_guard lock(mutex_);
    plexes_.push_back(std::move(ids));
  }

  void write(std::ostream& out) {
    std::sort(plexes_.begin(), plexes_.end());
    std::string text;
    for (const auto& p : plexes_) {
      append_line(text, p);
      if (text.size() >= LineSink::kBlock) {
        out << text;
        text.clear();
      }
    }
    out << text;
    out.flush();
  }

 private:
  const Graph& graph_;
  std::mutex mutex_;
  std::vector<std::vector<ExternalId>> plexes_;
};

RunSummary run_oracle(const Graph& g, const RunConfig& cfg, PlexSink& sink) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  const OracleResult result = brute_list(g, cfg.k, cfg.l);
  RunSummary summary;
  for (const auto& p : result.plexes) {
    if (!cfg.count_only) sink.accept(p);
    ++summary.count;
    summary.max_size = std::max(summary.max_size, p.size());
  }
  summary.elapsed = std::chrono::steady_clock::now() - start;
  return summary;
}

int execute(const Options& opt) {
  const Graph g = load(opt.input);
  if (opt.stats) {
    const GraphStats s = stats(g);
    std::cout << "n=" << s.n << " m=" << s.m << " max_degree=" << s.max_degree
              << " degeneracy=" << s.degeneracy << '\n';
    return kOk;
  }

  RunConfig cfg;
  cfg.k = opt.k;
  cfg.l = opt.min_size;
  cfg.threads = opt.threads;
  cfg.split_threshold = opt.split_threshold;
  cfg.prune1 = !opt.no_prune1;
  cfg.prune2 = !opt.no_prune2;
  cfg.count_only = opt.count_only;
  validate(cfg);

  std::ofstream file;
  if (!opt.output.empty()) {
    file.open(opt.output, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open output file " + opt.output);
  }
  std::ostream& out = opt.output.empty() ? std::cout : file;

  std::unique_ptr<PlexSink> sink;
  if (opt.count_only) {
    sink = std::make_unique<NullSink>();
  } else if (opt.sorted) {
    sink = std::make_unique<SortingSink>(g);
  } else {
    sink = std::make_unique<LineSink>(g, out);
  }

  const RunSummary summary = opt.oracle ? run_oracle(g, cfg, *sink) : run(g, cfg, *sink);

  if (auto* lines = dynamic_cast<LineSink*>(sink.get())) lines->finish();
  if (auto* sorting = dynamic_cast<SortingSink*>(sink.get())) sorting->write(out);
  if (!out) throw IoError("failed writing output");

  std::cerr << "plexes=" << summary.count << " max_size=" << summary.max_size
            << " elapsed_ms=" << static_cast<long long>(summary.elapsed.count()) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"List maximal k-plexes of an undirected graph"};
  app.set_version_flag("--version", "kplex 0.1.0");
  Options opt;
  app.add_option("--input", opt.input, "Edge-list file")->required();
  auto* k_opt = app.add_option("--k", opt.k, "Each vertex may miss at most k members, itself included");
  app.add_option("--min-size", opt.min_size,
                 "Only list plexes with at least this many vertices (0 = all; else >= 2k-1)");
  app.add_option("--threads", opt.threads, "Worker threads")->capture_default_str();
  app.add_flag("--count-only", opt.count_only, "Count plexes without writing them");
  app.add_option("--output", opt.output, "Output file (default: standard output)");
  app.add_flag("--sorted", opt.sorted, "Sort output lines before writing");
  app.add_flag("--no-prune1", opt.no_prune1, "Disable seed-graph vertex pruning");
  app.add_flag("--no-prune2", opt.no_prune2, "Disable seed-pair pruning");
  app.add_option("--split-threshold", opt.split_threshold,
                 "Candidate count above which a search may hand work to idle threads")
      ->capture_default_str();
  app.add_flag("--stats", opt.stats, "Print n, m, max degree and degeneracy, then exit");
  app.add_flag("--oracle", opt.oracle, "Use the brute-force enumerator (small graphs only)");

  try {
    app.parse(argc, argv);
    if (!opt.stats && k_opt->count() == 0) throw CLI::RequiredError("--k");
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return execute(opt);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConstraint;
  } catch (const ParseError& e) {
    std::cerr << "error: " << opt.input << ": " << e.what() << '\n';
    return kIo;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
}

}  // namespace kplex::cli
