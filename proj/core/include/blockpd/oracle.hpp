#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "blockpd/dp.hpp"
#include "blockpd/graph.hpp"

namespace blockpd::oracle {

inline constexpr std::size_t kMaxPdsVertices = 22;
inline constexpr std::size_t kMaxStateVertices = 18;

struct OracleOptions {
  // Skip the matching test for subsets no lighter than the incumbent. Does
  // not change the result; disable to check every subset.
  bool prune_by_weight = true;
};

struct OracleSolution {
  VertexSet set;
  Weight weight = 0;
};

// Exhaustive minimum-weight paired-dominating set. Subsets are visited by
// increasing size, then by increasing bitmask; the first optimum found is
// kept.
// Returns nullopt iff none exists. Throws Error(kTooLarge) above
// kMaxPdsVertices.
std::optional<OracleSolution> min_pds(const WeightedGraph& g,
                                      const OracleOptions& options = {});

// Exhaustive optimum of the rooted state definition `kind` at u over the
// whole graph g. Throws Error(kTooLarge) above kMaxStateVertices.
ExtendedWeight state(const WeightedGraph& g, VertexId u, StateKind kind);

// Calls `visit` for every connected block graph on 2..n_max vertices, one
// per isomorphism class, unit weights. Ordered by vertex count, then by a
// canonical code of the block-cut-vertex tree. n_max <= 8.
void enumerate_block_graphs(std::size_t n_max,
                            const std::function<void(const WeightedGraph&)>& visit);
std::vector<WeightedGraph> enumerate_block_graphs(std::size_t n_max);

}  // namespace blockpd::oracle
