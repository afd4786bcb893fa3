#include <gtest/gtest.h>

#include "kplex/oracle.hpp"
#include "kplex/smallplex.hpp"
#include "support/fixtures.hpp"

namespace kplex {
namespace {

using testing::graph_of;
using testing::PlexList;

PlexList small_plexes(const Graph& g, int k) {
  CollectingSink sink;
  const EmitTally tally = list_small_plexes(g, k, sink);
  EXPECT_EQ(tally.count, sink.size());
  return sink.sorted();
}

// Oracle answer restricted to sizes at most 2k-2.
PlexList small_oracle(const Graph& g, int k) {
  PlexList out;
  for (auto& p : brute_list(g, k, 0).plexes) {
    if (p.size() <= static_cast<std::size_t>(2 * k - 2)) out.push_back(p);
  }
  return out;
}

TEST(SmallPlex, KOneEmitsNothing) {
  EXPECT_TRUE(small_plexes(graph_of({{0, 1}, {1, 2}}), 1).empty());
}

TEST(SmallPlex, TwoDisjointEdgesAreDisconnectedPlexes) {
  EXPECT_EQ(small_plexes(graph_of({{0, 1}, {2, 3}}), 2),
            (PlexList{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
}

TEST(SmallPlex, SingleVertex) {
  EXPECT_EQ(small_plexes(graph_of({{5, 5}}), 2), (PlexList{{0}}));
}

TEST(SmallPlex, RejectsNonPositiveK) {
  NullSink sink;
  EXPECT_THROW(list_small_plexes(graph_of({{0, 1}}), 0, sink), ConfigError);
}

TEST(SmallPlex, MatchesOracleOnRandomGraphs) {
  std::uint64_t seed = 100;
  for (std::size_t n : {6, 10, 13}) {
    for (double p : {0.15, 0.5, 0.85}) {
      for (int rep = 0; rep < 3; ++rep, ++seed) {
        const Graph g = testing::random_graph(n, p, seed);
        for (int k = 1; k <= 4; ++k) {
          EXPECT_EQ(small_plexes(g, k), small_oracle(g, k)) << "n=" << n << " p=" << p << " k=" << k;
        }
      }
    }
  }
}

TEST(SmallPlex, SizesNeverExceedCap) {
  const Graph g = testing::random_graph(20, 0.3, 5);
  for (int k = 2; k <= 4; ++k) {
    for (const auto& p : small_plexes(g, k)) EXPECT_LE(p.size(), static_cast<std::size_t>(2 * k - 2));
  }
}

}  // namespace
}  // namespace kplex
