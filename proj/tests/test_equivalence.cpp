#include <gtest/gtest.h>

#include "kplex/oracle.hpp"
#include "support/fixtures.hpp"

namespace kplex {
namespace {

// Every graph on up to six vertices, every k and l the engine accepts.
TEST(Equivalence, ExhaustiveUpToSixVertices) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::uint64_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = testing::graph_from_mask(n, mask);
      for (int k = 1; k <= 3; ++k) {
        for (int l : {0, 2 * k - 1, 2 * k}) {
          RunConfig cfg;
          cfg.k = k;
          cfg.l = l;
          ASSERT_EQ(testing::engine_plexes(g, cfg), brute_list(g, k, l).plexes)
              << "n=" << n << " mask=" << mask << " k=" << k << " l=" << l;
        }
      }
    }
  }
}

// Every graph on up to seven vertices up to isomorphism.
TEST(Equivalence, GraphAtlasUpToSevenVertices) {
  const auto atlas = testing::graph_atlas();
  ASSERT_EQ(atlas.size(), 1252U);
  for (std::size_t i = 0; i < atlas.size(); ++i) {
    const Graph& g = atlas[i];
    for (int k = 1; k <= 4; ++k) {
      for (int l : {0, 2 * k - 1, 2 * k + 1}) {
        RunConfig cfg;
        cfg.k = k;
        cfg.l = l;
        ASSERT_EQ(testing::engine_plexes(g, cfg), brute_list(g, k, l).plexes)
            << "atlas graph " << i << " k=" << k << " l=" << l;
      }
    }
  }
}

TEST(Equivalence, RandomGraphsAcrossDensities) {
  std::uint64_t seed = 7;
  for (std::size_t n : {8, 11, 14}) {
    for (double p : {0.2, 0.5, 0.8}) {
      for (int rep = 0; rep < 4; ++rep, ++seed) {
        const Graph g = testing::random_graph(n, p, seed);
        for (int k = 1; k <= 4; ++k) {
          for (int l : {0, 2 * k - 1, 2 * k + 1}) {
            RunConfig cfg;
            cfg.k = k;
            cfg.l = l;
            ASSERT_EQ(testing::engine_plexes(g, cfg), brute_list(g, k, l).plexes)
                << "n=" << n << " p=" << p << " seed=" << seed << " k=" << k << " l=" << l;
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace kplex
