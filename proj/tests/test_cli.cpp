#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "kplex/cli.hpp"
#include "support/fixtures.hpp"

namespace kplex {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("kplex_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "kplex");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    ::testing::internal::CaptureStdout();
    ::testing::internal::CaptureStderr();
    Result r;
    r.code = cli::main(static_cast<int>(argv.size()), argv.data());
    r.out = ::testing::internal::GetCapturedStdout();
    r.err = ::testing::internal::GetCapturedStderr();
    return r;
  }

  std::string data(const char* name) { return (testing::data_dir() / name).string(); }

  fs::path dir_;
};

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

TEST_F(Cli, SummaryLineAndCount) {
  const Result r = invoke({"--input", data("karate.txt"), "--k", "2", "--count-only"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(r.err.rfind("plexes=491 max_size=", 0), 0U) << r.err;
  EXPECT_NE(r.err.find(" elapsed_ms="), std::string::npos);
}

TEST_F(Cli, OutputLineCountMatchesSummary) {
  const Result r = invoke({"--input", data("lesmis.txt"), "--k", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), 2692U);
  EXPECT_EQ(r.err.rfind("plexes=2692 ", 0), 0U);
}

TEST_F(Cli, LinesUseExternalIdsAscending) {
  const auto input = write("g.txt", "# labels\n100 7\n7 55\n55 100\n55 9\n");
  const Result r = invoke({"--input", input.string(), "--k", "1", "--sorted"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "7 55 100\n9 55\n");
}

TEST_F(Cli, SortedOutputIdenticalAcrossThreads) {
  std::string first;
  for (const char* threads : {"1", "2", "8"}) {
    const auto out = dir_ / (std::string("out") + threads + ".txt");
    const Result r = invoke({"--input", data("lesmis.txt"), "--k", "3", "--threads", threads, "--sorted",
                             "--split-threshold", "1", "--output", out.string()});
    ASSERT_EQ(r.code, 0);
    const std::string text = slurp(out);
    if (first.empty()) {
      first = text;
      EXPECT_EQ(lines(first), 78001U);
    } else {
      EXPECT_EQ(text, first) << threads;
    }
  }
}

TEST_F(Cli, UnsortedOutputHasSameLinesAsSorted) {
  const Result a = invoke({"--input", data("karate.txt"), "--k", "3", "--threads", "4"});
  const Result b = invoke({"--input", data("karate.txt"), "--k", "3", "--sorted"});
  auto split = [](const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) v.push_back(line);
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(split(a.out), split(b.out));
}

TEST_F(Cli, MinSizeBelowBoundIsConstraintViolation) {
  const Result r = invoke({"--input", data("karate.txt"), "--k", "2", "--min-size", "2"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("l >= 2k-1"), std::string::npos) << r.err;
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(invoke({"--k", "2"}).code, 1);
  EXPECT_EQ(invoke({"--input", data("karate.txt")}).code, 1);
  EXPECT_EQ(invoke({"--input", data("karate.txt"), "--k", "two"}).code, 1);
  EXPECT_EQ(invoke({"--input", data("karate.txt"), "--k", "2", "--bogus"}).code, 1);
}

TEST_F(Cli, IoAndParseErrors) {
  EXPECT_EQ(invoke({"--input", (dir_ / "missing.txt").string(), "--k", "2"}).code, 2);
  const auto bad = write("bad.txt", "1 2\n3\n");
  const Result r = invoke({"--input", bad.string(), "--k", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_EQ(invoke({"--input", data("karate.txt"), "--k", "2", "--output", (dir_ / "no/such/dir/x").string()}).code,
            2);
}

TEST_F(Cli, Stats) {
  const Result r = invoke({"--input", data("karate.txt"), "--stats"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n=34 m=78 max_degree=17 degeneracy=4\n");
}

TEST_F(Cli, OracleMatchesEngine) {
  const Result engine = invoke({"--input", data("florentine.txt"), "--k", "2", "--sorted"});
  const Result oracle = invoke({"--input", data("florentine.txt"), "--k", "2", "--sorted", "--oracle"});
  EXPECT_EQ(oracle.code, 0);
  EXPECT_EQ(engine.out, oracle.out);
  EXPECT_EQ(invoke({"--input", data("karate.txt"), "--k", "2", "--oracle"}).code, 3);
}

TEST_F(Cli, PruneTogglesKeepOutput) {
  const Result on = invoke({"--input", data("lesmis.txt"), "--k", "3", "--min-size", "7", "--sorted"});
  const Result off = invoke(
      {"--input", data("lesmis.txt"), "--k", "3", "--min-size", "7", "--sorted", "--no-prune1", "--no-prune2"});
  EXPECT_EQ(on.code, 0);
  EXPECT_EQ(on.out, off.out);
  EXPECT_EQ(lines(on.out), 118U);
}

}  // namespace
}  // namespace kplex
