#include "blockpd/generator.hpp"

#include <limits>
#include <vector>

#include "blockpd/error.hpp"

namespace blockpd {

std::uint64_t InstanceRng::uniform(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return engine_();
  const std::uint64_t range = span + 1;
  // Lemire: take the high word of x * range, rejecting the biased low slice.
  const std::uint64_t threshold = (0 - range) % range;
  __extension__ using U128 = unsigned __int128;
  while (true) {
    const U128 product = static_cast<U128>(engine_()) * range;
    if (static_cast<std::uint64_t>(product) >= threshold) {
      return lo + static_cast<std::uint64_t>(product >> 64);
    }
  }
}

namespace {

void add_clique(std::vector<Edge>& edges, std::span<const VertexId> members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      edges.emplace_back(members[i], members[j]);
    }
  }
}

}  // namespace

WeightedGraph random_block_graph(std::size_t n_blocks,
                                 std::size_t max_block_size, Weight weight_max,
                                 std::uint64_t seed) {
  if (n_blocks == 0) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one block");
  }
  if (max_block_size < 2) {
    throw Error(ErrorCode::kInvalidArgument, "max block size must be >= 2");
  }
  if (weight_max == 0) {
    throw Error(ErrorCode::kInvalidArgument, "weight_max must be >= 1");
  }

  InstanceRng rng(seed);
  std::vector<Weight> weights;
  std::vector<Edge> edges;
  std::vector<VertexId> clique;

  auto new_vertex = [&] {
    const auto v = static_cast<VertexId>(weights.size());
    weights.push_back(rng.uniform(1, weight_max));
    return v;
  };

  const auto first = rng.uniform(2, max_block_size);
  for (std::uint64_t i = 0; i < first; ++i) clique.push_back(new_vertex());
  add_clique(edges, clique);

  for (std::size_t b = 1; b < n_blocks; ++b) {
    const auto at = static_cast<VertexId>(rng.uniform(0, weights.size() - 1));
    const auto size = rng.uniform(2, max_block_size);
    clique.assign(1, at);
    for (std::uint64_t i = 1; i < size; ++i) clique.push_back(new_vertex());
    add_clique(edges, clique);
  }
  const std::size_t n = weights.size();
  return WeightedGraph::build(n, std::move(weights), edges);
}

WeightedGraph chain_of_triangles(std::size_t n_blocks) {
  if (n_blocks == 0) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one block");
  }
  const std::size_t n = 2 * n_blocks + 1;
  std::vector<Edge> edges;
  edges.reserve(3 * n_blocks);
  for (std::size_t b = 0; b < n_blocks; ++b) {
    const auto left = static_cast<VertexId>(2 * b);
    const VertexId apex = left + 1;
    const VertexId right = left + 2;
    edges.emplace_back(left, apex);
    edges.emplace_back(left, right);
    edges.emplace_back(apex, right);
  }
  return WeightedGraph::build(n, std::vector<Weight>(n, 1), edges);
}

}  // namespace blockpd
