#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "g2graph/automorphism.hpp"
#include "g2graph/pipeline.hpp"
#include "oracles.hpp"

namespace g2graph {
namespace {

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, i + 5);
  }
  return g;
}

void expect_valid_group(const Graph& g, const PermGroup& grp) {
  for (const auto& p : grp.generators()) EXPECT_TRUE(is_automorphism(g, p));
}

TEST(Automorphism, SmallKnownGroups) {
  EXPECT_EQ(automorphism_group(Graph::cycle(5)).order(), 10u);
  EXPECT_EQ(automorphism_group(petersen()).order(), 120u);
  EXPECT_EQ(automorphism_group(Graph::complete(7)).order(), 5040u);
  EXPECT_EQ(automorphism_group(Graph(6)).order(), 720u);
  EXPECT_EQ(automorphism_group(Graph(1)).order(), 1u);
  EXPECT_EQ(automorphism_group(Graph(0)).order(), 1u);
  EXPECT_EQ(automorphism_group(Graph::complete(20)).order(), 2432902008176640000ULL);
}

TEST(Automorphism, OrbitsOfTrivialGroup) {
  // asymmetric graph on 6 vertices
  Graph g(6);
  for (auto [u, v] : {std::pair{0, 3}, {0, 5}, {1, 4}, {1, 5}, {2, 4}, {4, 5}}) g.add_edge(u, v);
  ASSERT_EQ(oracle::aut_count(g), 1u);
  const PermGroup grp = automorphism_group(g);
  EXPECT_EQ(grp.order(), 1u);
  EXPECT_EQ(grp.orbits().size(), 6u);
}

TEST(Automorphism, MatchesBacktrackOracleOnAllClassesUpTo8) {
  for (const auto& g : oracle::small_graph_classes()) {
    const auto expected = oracle::aut_count(g);
    const auto pruned = automorphism_search(g, {true});
    const auto full = automorphism_search(g, {false});
    ASSERT_EQ(pruned.group.order(), expected) << to_graph6(g);
    ASSERT_EQ(full.group.order(), expected) << to_graph6(g);
    expect_valid_group(g, pruned.group);
  }
}

TEST(Automorphism, MatchesBacktrackOracleOnRandom10VertexGraphs) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 200; ++t) {
    const Graph g = oracle::random_graph(9 + static_cast<int>(rng() % 2), t % 2 ? 0.5 : 0.2, rng);
    const auto expected = oracle::aut_count(g);
    EXPECT_EQ(automorphism_group(g).order(), expected);
    EXPECT_EQ(automorphism_group(g, {false}).order(), expected);
  }
}

TEST(Automorphism, Gamma) {
  const Construction c = build_construction();
  const auto res = automorphism_search(c.gamma);
  EXPECT_EQ(res.group.order(), 51840u);
  EXPECT_EQ(res.stats.search_order, 51840u);
  EXPECT_TRUE(res.group.is_transitive());
  expect_valid_group(c.gamma, res.group);
  const RankInfo info = rank_and_subdegrees(res.group, c.gamma);
  EXPECT_EQ(info.rank, 3);
  EXPECT_EQ(info.subdegrees, (std::vector<int>{1, 15, 20}));
  EXPECT_TRUE(info.suborbits_match_neighbourhood);
}

TEST(Automorphism, SwitchedGraphAndComplement) {
  const Construction c = build_construction();
  const Graph gp = switch_graph(c.gamma, find_switch_sets(c).canonical().vertex_set);
  for (bool prune : {true, false}) {
    const PermGroup grp = automorphism_group(gp, {prune});
    EXPECT_EQ(grp.order(), 12096u);
    EXPECT_TRUE(grp.is_transitive());
    expect_valid_group(gp, grp);
  }
  const Graph comp = complement(gp);
  const PermGroup grp = automorphism_group(comp);
  EXPECT_EQ(grp.order(), 12096u);
  const RankInfo info = rank_and_subdegrees(grp, comp);
  EXPECT_EQ(info.rank, 3);
  EXPECT_EQ(info.subdegrees, (std::vector<int>{1, 14, 21}));
  EXPECT_TRUE(info.suborbits_match_neighbourhood);
}

TEST(Automorphism, OrderInvariantUnderRelabelling) {
  const Construction c = build_construction();
  const Graph gp = switch_graph(c.gamma, find_switch_sets(c).canonical().vertex_set);
  std::mt19937_64 rng(1234);
  std::vector<int> perm(36);
  std::iota(perm.begin(), perm.end(), 0);
  for (int t = 0; t < 25; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(automorphism_group(gp.relabel(perm)).order(), 12096u);
  }
}

TEST(Automorphism, GeneratorsAreRejectedAfterEdgeFlip) {
  const Construction c = build_construction();
  Graph g = c.gamma;
  const PermGroup before = automorphism_group(g);
  g.toggle_edge(0, 1);
  const PermGroup after = automorphism_group(g);
  EXPECT_LT(after.order(), before.order());
  EXPECT_FALSE(after.is_transitive());
}

}  // namespace
}  // namespace g2graph
