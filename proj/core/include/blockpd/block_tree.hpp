#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blockpd/graph.hpp"

namespace blockpd {

using BlockId = std::uint32_t;

// Blocks, cut vertices and the bipartite block-cut-vertex tree of a
// connected graph.
//
// Block ids are canonical: every block's vertex list is sorted, and blocks
// are ordered lexicographically by that list, so block 0 always contains
// vertex 0. Cut vertices are listed in increasing vertex order.
class BlockCutTree {
 public:
  std::size_t block_count() const { return block_offsets_.size() - 1; }
  std::size_t cut_vertex_count() const { return cut_vertices_.size(); }
  std::size_t vertex_count() const { return cut_index_.size(); }

  std::span<const VertexId> block(BlockId b) const {
    return {block_vertices_.data() + block_offsets_[b],
            block_vertices_.data() + block_offsets_[b + 1]};
  }
  // Number of graph edges whose endpoints both lie in block b.
  std::size_t block_edge_count(BlockId b) const { return block_edges_[b]; }

  std::span<const VertexId> cut_vertices() const { return cut_vertices_; }
  bool is_cut_vertex(VertexId v) const { return cut_index_[v] != kNotCut; }
  // Position of v in cut_vertices(), if v is a cut vertex.
  std::optional<std::uint32_t> cut_index(VertexId v) const;

  // Tree adjacency: the cut vertices of a block (as indices into
  // cut_vertices()) and the blocks containing a cut vertex.
  std::span<const std::uint32_t> block_cut_neighbors(BlockId b) const {
    return {block_cuts_.data() + block_cut_offsets_[b],
            block_cuts_.data() + block_cut_offsets_[b + 1]};
  }
  std::span<const BlockId> cut_block_neighbors(std::uint32_t c) const {
    return {cut_blocks_.data() + cut_block_offsets_[c],
            cut_blocks_.data() + cut_block_offsets_[c + 1]};
  }

  bool is_pendant(BlockId b) const {
    return block_cut_neighbors(b).size() == 1;
  }

  // Pendant-block elimination order ending at block 0.
  std::span<const BlockId> elimination_order() const {
    return elimination_order_;
  }

 private:
  friend BlockCutTree find_blocks(const WeightedGraph& g);

  static constexpr std::uint32_t kNotCut = UINT32_MAX;

  std::vector<std::size_t> block_offsets_{0};
  std::vector<VertexId> block_vertices_;
  std::vector<std::size_t> block_edges_;
  std::vector<VertexId> cut_vertices_;
  std::vector<std::uint32_t> cut_index_;
  std::vector<std::size_t> block_cut_offsets_{0};
  std::vector<std::uint32_t> block_cuts_;
  std::vector<std::size_t> cut_block_offsets_{0};
  std::vector<BlockId> cut_blocks_;
  std::vector<BlockId> elimination_order_;
};

// Biconnected components by iterative DFS with an edge stack, in O(n + m).
// Bridges become two-vertex blocks; a single vertex is one block.
// Throws Error(kDisconnected) for disconnected or empty graphs.
BlockCutTree find_blocks(const WeightedGraph& g);

// True iff every block of g induces a clique. g must be connected.
bool is_block_graph(const WeightedGraph& g);
bool is_block_graph(const BlockCutTree& tree);

// First block that is not a clique, if any.
std::optional<BlockId> first_non_clique_block(const BlockCutTree& tree);

// Repeatedly removes the smallest-id leaf block of the remaining tree,
// never removing block 0, which comes last. Each removed block has at most
// one cut vertex left at the moment of its removal. Linear time.
std::vector<BlockId> pendant_elimination_order(const BlockCutTree& tree);

// Graphviz rendering: blocks as boxes, cut vertices as circles, 1-based ids.
std::string to_dot(const BlockCutTree& tree);

}  // namespace blockpd
