#include <gtest/gtest.h>

#include <map>

#include "blockpd/block_tree.hpp"
#include "blockpd/error.hpp"
#include "blockpd/generator.hpp"
#include "blockpd/oracle.hpp"
#include "graphs.hpp"

namespace blockpd {
namespace {

TEST(OracleMinPds, SmallGraphs) {
  const auto k2 = oracle::min_pds(testing::clique(2, {5, 3}));
  ASSERT_TRUE(k2);
  EXPECT_EQ(k2->weight, 8u);
  EXPECT_EQ(k2->set.members, (std::vector<VertexId>{0, 1}));

  const auto p4 = oracle::min_pds(testing::path(4));
  ASSERT_TRUE(p4);
  EXPECT_EQ(p4->weight, 2u);
  EXPECT_EQ(p4->set.members, (std::vector<VertexId>{1, 2}));
}

TEST(OracleMinPds, FifteenVertexExample) {
  const auto g = testing::fifteen_vertex_graph();
  const auto s = oracle::min_pds(g);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->weight, 6u);
  EXPECT_TRUE(is_paired_dominating_set(g, s->set));
}

TEST(OracleMinPds, NoneWithIsolatedVertex) {
  EXPECT_FALSE(oracle::min_pds(testing::unit_graph(3, {{0, 1}})));
  EXPECT_FALSE(oracle::min_pds(testing::unit_graph(1, {})));
}

TEST(OracleMinPds, PruningDoesNotChangeResult) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = random_block_graph(4, 3, 30, seed);
    const auto fast = oracle::min_pds(g);
    const auto full = oracle::min_pds(g, {.prune_by_weight = false});
    ASSERT_TRUE(fast && full);
    EXPECT_EQ(fast->set, full->set);
  }
}

TEST(OracleMinPds, TooLarge) {
  try {
    oracle::min_pds(testing::path(23));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(OracleState, SingleVertex) {
  const auto g = testing::make_graph(1, {4}, {});
  EXPECT_EQ(oracle::state(g, 0, StateKind::kD), ExtendedWeight(4));
  EXPECT_EQ(oracle::state(g, 0, StateKind::kPBar), ExtendedWeight(0));
  EXPECT_EQ(oracle::state(g, 0, StateKind::kP), kInfeasible);
  EXPECT_EQ(oracle::state(g, 0, StateKind::kPPrime), kInfeasible);
}

TEST(OracleState, K2AndP3) {
  EXPECT_EQ(oracle::state(testing::clique(2), 0, StateKind::kPPrime),
            kInfeasible);
  EXPECT_EQ(oracle::state(testing::path(3), 0, StateKind::kPPrime),
            ExtendedWeight(2));
  EXPECT_THROW(oracle::state(testing::path(19), 0, StateKind::kD), Error);
}

TEST(OracleState, ConsistentWithMinPds) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = random_block_graph(3 + seed % 3, 3, 20, seed);
    const Weight best = oracle::min_pds(g)->weight;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      const auto p = oracle::state(g, u, StateKind::kP);
      const auto pp = oracle::state(g, u, StateKind::kPPrime);
      EXPECT_GE(p, ExtendedWeight(best));
      EXPECT_EQ(std::min(p, pp), ExtendedWeight(best));
    }
  }
}

TEST(Enumerate, TinyCases) {
  const auto two = oracle::enumerate_block_graphs(2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0], testing::clique(2));

  const auto three = oracle::enumerate_block_graphs(3);
  ASSERT_EQ(three.size(), 3u);
  std::size_t n3_edges = 0;
  for (const auto& g : three) {
    if (g.vertex_count() == 3) n3_edges += g.edge_count();
  }
  EXPECT_EQ(n3_edges, 5u);  // P3 and K3
}

// Connected block graphs on n vertices, n = 2..7.
TEST(Enumerate, CountsPerVertexCount) {
  std::map<std::size_t, std::size_t> count;
  oracle::enumerate_block_graphs(7, [&](const WeightedGraph& g) {
    ++count[g.vertex_count()];
    EXPECT_TRUE(is_connected(g));
    EXPECT_TRUE(is_block_graph(g));
  });
  const std::map<std::size_t, std::size_t> expected = {
      {2, 1}, {3, 2}, {4, 4}, {5, 9}, {6, 22}, {7, 59}};
  EXPECT_EQ(count, expected);
}

TEST(Enumerate, Deterministic) {
  EXPECT_EQ(oracle::enumerate_block_graphs(6),
            oracle::enumerate_block_graphs(6));
  EXPECT_THROW(oracle::enumerate_block_graphs(9), Error);
}

}  // namespace
}  // namespace blockpd
