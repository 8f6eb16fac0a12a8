#include <gtest/gtest.h>

#include <limits>

#include "blockpd/error.hpp"
#include "blockpd/graph.hpp"
#include "graphs.hpp"

namespace blockpd {
namespace {

using testing::clique;
using testing::cycle;
using testing::make_graph;
using testing::path;
using testing::star;
using testing::unit_graph;

ErrorCode build_error(std::size_t n, std::vector<Weight> w,
                      std::vector<Edge> edges) {
  try {
    WeightedGraph::build(n, std::move(w), edges);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "build did not throw";
  return ErrorCode::kInternalInconsistency;
}

TEST(WeightedGraph, BuildsSortedAdjacency) {
  const auto g = make_graph(4, {5, 3, 2, 7}, {{2, 0}, {0, 1}, {3, 0}});
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.max_degree(), 3u);
  EXPECT_EQ(std::vector<VertexId>(g.neighbors(0).begin(), g.neighbors(0).end()),
            (std::vector<VertexId>{1, 2, 3}));
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_FALSE(g.adjacent(1, 2));
  EXPECT_EQ(g.total_weight(), 17u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));
}

TEST(WeightedGraph, RejectsBadInput) {
  EXPECT_EQ(build_error(2, {1, 1}, {{0, 2}}), ErrorCode::kOutOfRange);
  EXPECT_EQ(build_error(2, {1, 1}, {{1, 1}}), ErrorCode::kSelfLoop);
  EXPECT_EQ(build_error(2, {1, 1}, {{0, 1}, {1, 0}}),
            ErrorCode::kDuplicateEdge);
  EXPECT_EQ(build_error(3, {1, 1}, {}), ErrorCode::kOutOfRange);
  const Weight big = std::numeric_limits<Weight>::max() / 2 + 1;
  EXPECT_EQ(build_error(2, {big, big}, {{0, 1}}), ErrorCode::kWeightOverflow);
}

TEST(WeightedGraph, EqualityIgnoresEdgeOrder) {
  EXPECT_EQ(unit_graph(3, {{0, 1}, {1, 2}}), unit_graph(3, {{2, 1}, {1, 0}}));
  EXPECT_NE(unit_graph(3, {{0, 1}, {1, 2}}), unit_graph(3, {{0, 1}, {0, 2}}));
}

TEST(VertexSet, SortsAndWeighs) {
  const auto g = make_graph(3, {4, 5, 6}, {{0, 1}, {1, 2}});
  const auto s = VertexSet::of(g, {2, 0});
  EXPECT_EQ(s.members, (std::vector<VertexId>{0, 2}));
  EXPECT_EQ(s.total_weight, 10u);
  EXPECT_THROW(VertexSet::of(g, {0, 0}), Error);
  EXPECT_THROW(VertexSet::of(g, {3}), Error);
}

TEST(Connectivity, Basic) {
  EXPECT_TRUE(is_connected(path(5)));
  EXPECT_FALSE(is_connected(unit_graph(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_connected(unit_graph(1, {})));
}

TEST(Domination, PathOfFour) {
  const auto g = path(4);
  EXPECT_TRUE(is_dominating_set(g, VertexSet::of(g, {1, 2})));
  EXPECT_FALSE(is_dominating_set(g, VertexSet::of(g, {0, 1})));
  EXPECT_TRUE(is_paired_dominating_set(g, VertexSet::of(g, {1, 2})));
  EXPECT_FALSE(is_paired_dominating_set(g, VertexSet::of(g, {0, 3})));
}

TEST(PerfectMatching, SmallCases) {
  const auto p4 = path(4);
  EXPECT_TRUE(has_perfect_matching(p4, VertexSet::of(p4, {})));
  EXPECT_TRUE(has_perfect_matching(p4, VertexSet::of(p4, {0, 1, 2, 3})));
  EXPECT_FALSE(has_perfect_matching(p4, VertexSet::of(p4, {0, 1, 2})));
  EXPECT_FALSE(has_perfect_matching(p4, VertexSet::of(p4, {0, 2})));

  // A star has no perfect matching on more than two vertices.
  const auto s = star(3);
  EXPECT_FALSE(has_perfect_matching(s, VertexSet::of(s, {0, 1, 2, 3})));

  const auto c6 = cycle(6);
  EXPECT_TRUE(has_perfect_matching(c6, VertexSet::of(c6, {0, 1, 2, 3, 4, 5})));
  EXPECT_TRUE(has_perfect_matching(c6, VertexSet::of(c6, {0, 1, 3, 4})));
  EXPECT_FALSE(has_perfect_matching(c6, VertexSet::of(c6, {0, 2, 4, 5})));
}

// Forcing a degree-1 vertex must not strand its partner's other neighbor.
TEST(PerfectMatching, ForcedPairs) {
  // 0-1-2-3 plus 1-4: {0,1,2,3} matches (01)(23); {0,1,2,4} does not.
  const auto g = unit_graph(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
  EXPECT_TRUE(has_perfect_matching(g, VertexSet::of(g, {0, 1, 2, 3})));
  EXPECT_FALSE(has_perfect_matching(g, VertexSet::of(g, {0, 1, 2, 4})));
  const auto k4 = clique(4);
  EXPECT_TRUE(has_perfect_matching(k4, VertexSet::of(k4, {0, 1, 2, 3})));
}

TEST(PairedDomination, IsolatedVertexHasNone) {
  const auto g = unit_graph(3, {{0, 1}});
  EXPECT_FALSE(is_paired_dominating_set(g, VertexSet::of(g, {0, 1})));
  EXPECT_FALSE(is_paired_dominating_set(g, VertexSet::of(g, {0, 1, 2})));
}

TEST(InducedSubgraph, KeepsOrderAndWeights) {
  const auto g = make_graph(4, {1, 2, 3, 4}, {{0, 1}, {1, 2}, {2, 3}});
  const std::vector<VertexId> keep = {2, 1, 3};
  const auto h = induced_subgraph(g, keep);
  EXPECT_EQ(h.vertex_count(), 3u);
  EXPECT_EQ(h.weight(0), 3u);
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
}

}  // namespace
}  // namespace blockpd
