#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "blockpd/weight.hpp"

namespace blockpd {

// Dense 0-based vertex index. Instance files use 1-based ids.
using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

// Simple undirected graph with nonnegative vertex weights, stored as sorted
// CSR adjacency. Immutable after construction.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  // Validates and builds the graph. Throws Error with kOutOfRange,
  // kSelfLoop, kDuplicateEdge or kWeightOverflow.
  static WeightedGraph build(std::size_t n, std::vector<Weight> weights,
                             std::span<const Edge> edges);

  std::size_t vertex_count() const { return weights_.size(); }
  std::size_t edge_count() const { return adjacency_.size() / 2; }
  std::size_t max_degree() const { return max_degree_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const {
    return offsets_[v + 1] - offsets_[v];
  }
  bool adjacent(VertexId u, VertexId v) const;

  Weight weight(VertexId v) const { return weights_[v]; }
  std::span<const Weight> weights() const { return weights_; }
  Weight total_weight() const { return total_weight_; }

  // Each edge once, as (u, v) with u < v, in increasing order.
  std::vector<Edge> edges() const;

  friend bool operator==(const WeightedGraph&,
                         const WeightedGraph&) = default;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adjacency_;
  std::vector<Weight> weights_;
  Weight total_weight_ = 0;
  std::size_t max_degree_ = 0;
};

// Sorted, duplicate-free vertex subset with its cached total weight.
struct VertexSet {
  std::vector<VertexId> members;
  Weight total_weight = 0;

  // Sorts `members` and computes the weight. Throws kOutOfRange for ids
  // outside the graph and kInvalidArgument for repeated ids.
  static VertexSet of(const WeightedGraph& g, std::vector<VertexId> members);

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

bool is_connected(const WeightedGraph& g);

bool is_dominating_set(const WeightedGraph& g, const VertexSet& s);

// Exact test by backtracking over the lowest unmatched vertex, after forcing
// vertices with a single remaining neighbor. Exponential in the worst case;
// meant for oracle-sized sets and solver output validation.
bool has_perfect_matching(const WeightedGraph& g, const VertexSet& s);

bool is_paired_dominating_set(const WeightedGraph& g, const VertexSet& s);

// Subgraph induced by `vertices` (in the given order); vertex i of the
// result is vertices[i].
WeightedGraph induced_subgraph(const WeightedGraph& g,
                               std::span<const VertexId> vertices);

}  // namespace blockpd
