#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

#include "blockpd/graph.hpp"

namespace blockpd {

// Instances are a pure function of (algorithm, parameters, seed). Bounded
// draws use Lemire's multiply-shift with rejection on std::mt19937_64, so
// they do not depend on the standard library's distributions.
inline constexpr std::string_view kGeneratorAlgorithm = "mt19937_64+lemire";

class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

 private:
  std::mt19937_64 engine_;
};

// One clique of random size in [2, max_block_size], then n_blocks - 1
// further cliques, each glued at a uniformly chosen existing vertex. Vertex
// weights are uniform in [1, weight_max]. Throws kInvalidArgument for
// n_blocks == 0, max_block_size < 2 or weight_max == 0.
WeightedGraph random_block_graph(std::size_t n_blocks,
                                 std::size_t max_block_size, Weight weight_max,
                                 std::uint64_t seed);

// n_blocks triangles in a path, consecutive ones sharing one vertex; unit
// weights, 2 * n_blocks + 1 vertices.
WeightedGraph chain_of_triangles(std::size_t n_blocks);

}  // namespace blockpd
