#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "kplex/bkpivot.hpp"
#include "kplex/plex.hpp"
#include "support/fixtures.hpp"

namespace kplex {
namespace {

using testing::graph_of;

DegeneracyOrder identity_order(std::size_t n) {
  DegeneracyOrder ord;
  for (VertexId v = 0; v < n; ++v) {
    ord.eta.push_back(v);
    ord.position.push_back(v);
  }
  return ord;
}

LocalId local_of(const Graph& g, const SeedGraph& sg, ExternalId ext) {
  for (LocalId v = 0; v < sg.size(); ++v) {
    if (g.original_id(sg.global(v)) == ext) return v;
  }
  return kNoLocal;
}

std::vector<ExternalId> external(const Graph& g, const SeedGraph& sg, std::vector<LocalId> set) {
  std::vector<ExternalId> out;
  for (LocalId v : set) out.push_back(g.original_id(sg.global(v)));
  std::sort(out.begin(), out.end());
  return out;
}

// k = 4, P = {1, 2}, C = {3, .., 7}; vertex 1 sees only 6, every other pair
// is adjacent.
struct PivotFigure : ::testing::Test {
  PivotFigure()
      : g(graph_of({{1, 6}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 4}, {3, 5}, {3, 6},
                    {3, 7}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}})),
        sg(build_seed_graph(g, identity_order(g.num_vertices()), 0)) {
    std::vector<LocalId> c;
    for (LocalId v = 0; v < sg.size(); ++v) c.push_back(v);
    st = SearchState(sg.size(), c, {});
    st.include(sg, 0);
    st.include(sg, local_of(g, sg, 2));
  }
  static constexpr int k = 4;
  Graph g;
  SeedGraph sg;
  SearchState st;
};

TEST_F(PivotFigure, PivotIsVertexOneInP) {
  const Pivot pivot = select_pivot(sg, st);
  EXPECT_EQ(g.original_id(sg.global(pivot.vertex)), 1U);
  EXPECT_TRUE(pivot.in_p);
  EXPECT_EQ(pivot.non_neighbors, 6U);
  EXPECT_EQ(st.nonadj[pivot.vertex], 2U);  // P \ N(u_p) = {1, 2}
  EXPECT_EQ(external(g, sg, pivot_non_neighbors(sg, st, pivot.vertex)),
            (std::vector<ExternalId>{3, 4, 5, 7}));
}

TEST_F(PivotFigure, ThreeBranches) {
  const Pivot pivot = select_pivot(sg, st);
  const auto us = pivot_non_neighbors(sg, st, pivot.vertex);
  std::vector<std::pair<std::vector<ExternalId>, std::vector<ExternalId>>> children;
  const auto before = st;
  branch_on_pivot(sg, st, pivot, k, [&](SearchState& child) {
    children.emplace_back(external(g, sg, child.p), external(g, sg, child.x));
  });
  ASSERT_EQ(children.size(), 3U);
  const ExternalId u1 = g.original_id(sg.global(us[0]));
  const ExternalId u2 = g.original_id(sg.global(us[1]));
  std::vector<ExternalId> rest;
  for (std::size_t i = 2; i < us.size(); ++i) rest.push_back(g.original_id(sg.global(us[i])));
  std::sort(rest.begin(), rest.end());

  EXPECT_EQ(children[0].first, (std::vector<ExternalId>{1, 2}));
  EXPECT_EQ(children[0].second, (std::vector<ExternalId>{u1}));
  auto p2 = std::vector<ExternalId>{1, 2, u1};
  std::sort(p2.begin(), p2.end());
  EXPECT_EQ(children[1].first, p2);
  EXPECT_EQ(children[1].second, (std::vector<ExternalId>{u2}));
  auto p3 = std::vector<ExternalId>{1, 2, u1, u2};
  std::sort(p3.begin(), p3.end());
  EXPECT_EQ(children[2].first, p3);
  EXPECT_EQ(children[2].second, rest);

  // Everything restored.
  EXPECT_EQ(st.p, before.p);
  EXPECT_EQ(st.nonadj, before.nonadj);
  auto c1 = st.c, c2 = before.c;
  std::sort(c1.begin(), c1.end());
  std::sort(c2.begin(), c2.end());
  EXPECT_EQ(c1, c2);
  EXPECT_TRUE(st.x.empty());
}

TEST(FilterExtendable, EmptyPKeepsEverything) {
  const Graph g = testing::random_graph(10, 0.3, 1);
  const SeedGraph sg = build_seed_graph(g, identity_order(10), 0);
  std::vector<LocalId> all;
  for (LocalId v = 0; v < sg.size(); ++v) all.push_back(v);
  const SearchState st(sg.size(), all, {});
  EXPECT_EQ(filter_extendable(sg, st, st.c, 2), all);
}

TEST(FilterExtendable, CliqueCaseKeepsCommonNeighbors) {
  const Graph g = graph_of({{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}});
  const SeedGraph sg = build_seed_graph(g, identity_order(5), 0);
  std::vector<LocalId> all;
  for (LocalId v = 0; v < sg.size(); ++v) all.push_back(v);
  SearchState st(sg.size(), all, {});
  st.include(sg, 0);
  st.include(sg, local_of(g, sg, 1));
  std::vector<ExternalId> kept;
  for (LocalId v : filter_extendable(sg, st, st.c, 1)) kept.push_back(g.original_id(sg.global(v)));
  std::sort(kept.begin(), kept.end());
  EXPECT_EQ(kept, (std::vector<ExternalId>{2, 3}));
}

TEST(FilterExtendable, AgreesWithDefinitionOnRandomStates) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::random_graph(12, 0.5, static_cast<std::uint64_t>(trial));
    const SeedGraph sg = build_seed_graph(g, identity_order(12), 0);
    const int k = 1 + trial % 3;
    std::vector<LocalId> all;
    for (LocalId v = 0; v < sg.size(); ++v) all.push_back(v);
    SearchState st(sg.size(), all, {});
    std::shuffle(all.begin(), all.end(), rng);
    for (LocalId v : all) {
      if (rng() % 2 == 0 && st.extendable(sg, v, k)) st.include(sg, v);
    }
    std::vector<VertexId> p_global;
    for (LocalId v : st.p) p_global.push_back(sg.global(v));
    ASSERT_TRUE(is_kplex(g, p_global, k));
    for (LocalId v : st.c) {
      auto q = p_global;
      q.push_back(sg.global(v));
      EXPECT_EQ(st.extendable(sg, v, k), is_kplex(g, q, k));
    }
  }
}

TEST(SelectPivot, StarPicksALeaf) {
  const Graph g = graph_of({{0, 1}, {0, 2}, {0, 3}});
  const SeedGraph sg = build_seed_graph(g, identity_order(4), 0);
  std::vector<LocalId> all;
  for (LocalId v = 0; v < sg.size(); ++v) all.push_back(v);
  const SearchState st(sg.size(), all, {});
  EXPECT_NE(g.original_id(sg.global(select_pivot(sg, st).vertex)), 0U);
}

TEST(BkPivotSearch, CompleteGraphCliqueCase) {
  const Graph g = graph_of({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const SeedGraph sg = build_seed_graph(g, identity_order(4), 0);
  const auto sets = enum_seed_sets(sg, 1, 0);
  ASSERT_EQ(sets.size(), 1U);
  std::vector<std::vector<LocalId>> out;
  bkpivot_search(sg, 1, sets.front(), 0,
                 [&](std::span<const LocalId> p) { out.emplace_back(p.begin(), p.end()); }, {});
  EXPECT_EQ(out, (std::vector<std::vector<LocalId>>{{0, 1, 2, 3}}));
}

TEST(BkPivotSearch, StarGivesThreePlexes) {
  const Graph g = graph_of({{0, 1}, {0, 2}, {0, 3}});
  const auto plexes = testing::engine_plexes(g, RunConfig{.k = 2});
  EXPECT_EQ(plexes, (testing::PlexList{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}));
}

// Every pivot node in p branches into exactly k'+1 children on graphs where
// all branches stay feasible, and k' <= k-1 always.
TEST(BranchOnPivot, ArityBound) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = testing::random_graph(12, 0.6, seed);
    const SeedGraph sg = build_seed_graph(g, identity_order(12), 0);
    const int k = 2 + static_cast<int>(seed % 3);
    std::vector<LocalId> all;
    for (LocalId v = 1; v < sg.size(); ++v) all.push_back(v);
    SearchState st(sg.size(), all, {});
    st.c.push_back(0);
    st.include(sg, 0);
    st.c = filter_extendable(sg, st, st.c, k);
    const Pivot pivot = select_pivot(sg, st);
    if (!pivot.in_p || pivot.non_neighbors <= static_cast<std::uint32_t>(k)) continue;
    const std::size_t kprime = static_cast<std::size_t>(k) - st.nonadj[pivot.vertex];
    EXPECT_LE(kprime, static_cast<std::size_t>(k - 1));
    const auto us = pivot_non_neighbors(sg, st, pivot.vertex);
    EXPECT_GE(us.size(), kprime + 1);
    std::size_t children = 0;
    branch_on_pivot(sg, st, pivot, k, [&](SearchState&) { ++children; });
    EXPECT_LE(children, kprime + 1);
    EXPECT_GE(children, 1U);
  }
}

}  // namespace
}  // namespace kplex
