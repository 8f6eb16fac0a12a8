#include "blockpd/block_tree.hpp"

#include <algorithm>
#include <sstream>

#include "blockpd/error.hpp"

namespace blockpd {
namespace {

struct RawBlocks {
  std::vector<std::size_t> offsets{0};
  std::vector<VertexId> vertices;
  std::vector<std::size_t> edge_counts;

  std::size_t count() const { return offsets.size() - 1; }
};

// Hopcroft-Tarjan with an explicit DFS stack.
RawBlocks biconnected_components(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  RawBlocks raw;
  if (n == 1) {
    raw.vertices.push_back(0);
    raw.offsets.push_back(1);
    raw.edge_counts.push_back(0);
    return raw;
  }

  constexpr VertexId kNoParent = UINT32_MAX;
  std::vector<std::uint32_t> disc(n, 0), low(n, 0);
  std::vector<std::uint32_t> stamp(n, UINT32_MAX);
  std::vector<Edge> edge_stack;
  struct Frame {
    VertexId vertex;
    VertexId parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::uint32_t clock = 1;
  disc[0] = low[0] = clock;
  stack.push_back({0, kNoParent, 0});

  while (!stack.empty()) {
    Frame& f = stack.back();
    const VertexId v = f.vertex;
    auto nbrs = g.neighbors(v);
    if (f.next < nbrs.size()) {
      const VertexId w = nbrs[f.next++];
      if (w == f.parent) continue;
      if (disc[w] == 0) {
        edge_stack.emplace_back(v, w);
        disc[w] = low[w] = ++clock;
        stack.push_back({w, v, 0});
      } else if (disc[w] < disc[v]) {
        edge_stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }

    const VertexId parent = f.parent;
    stack.pop_back();
    if (parent == kNoParent) break;
    low[parent] = std::min(low[parent], low[v]);
    if (low[v] < disc[parent]) continue;

    // parent separates the subtree of v: pop its block.
    const auto block = static_cast<std::uint32_t>(raw.count());
    std::size_t edges = 0;
    auto add = [&](VertexId x) {
      if (stamp[x] != block) {
        stamp[x] = block;
        raw.vertices.push_back(x);
      }
    };
    while (true) {
      const Edge e = edge_stack.back();
      edge_stack.pop_back();
      ++edges;
      add(e.first);
      add(e.second);
      if (e.first == parent && e.second == v) break;
    }
    raw.offsets.push_back(raw.vertices.size());
    raw.edge_counts.push_back(edges);
  }
  return raw;
}

// Stable counting sort of `order` by key(order[i]) in [0, range).
template <typename Key>
void counting_sort(std::vector<std::uint32_t>& order, std::size_t range,
                   Key key) {
  std::vector<std::size_t> count(range + 1, 0);
  for (auto b : order) ++count[key(b) + 1];
  for (std::size_t i = 0; i < range; ++i) count[i + 1] += count[i];
  std::vector<std::uint32_t> out(order.size());
  for (auto b : order) out[count[key(b)]++] = b;
  order = std::move(out);
}

}  // namespace

std::optional<std::uint32_t> BlockCutTree::cut_index(VertexId v) const {
  if (cut_index_[v] == kNotCut) return std::nullopt;
  return cut_index_[v];
}

BlockCutTree find_blocks(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw Error(ErrorCode::kDisconnected, "graph has no vertices");
  if (!is_connected(g)) {
    throw Error(ErrorCode::kDisconnected, "graph is not connected");
  }

  const RawBlocks raw = biconnected_components(g);
  const std::size_t x = raw.count();

  // Vertex -> raw blocks, then rebuild every block's list in vertex order.
  std::vector<std::size_t> member_offsets(n + 1, 0);
  for (VertexId v : raw.vertices) ++member_offsets[v + 1];
  for (std::size_t v = 0; v < n; ++v) member_offsets[v + 1] += member_offsets[v];
  std::vector<std::uint32_t> membership(raw.vertices.size());
  {
    std::vector<std::size_t> fill(member_offsets.begin(),
                                  member_offsets.end() - 1);
    for (std::uint32_t b = 0; b < x; ++b) {
      for (std::size_t i = raw.offsets[b]; i < raw.offsets[b + 1]; ++i) {
        membership[fill[raw.vertices[i]]++] = b;
      }
    }
  }
  std::vector<VertexId> sorted(raw.vertices.size());
  {
    std::vector<std::size_t> fill(raw.offsets.begin(), raw.offsets.end() - 1);
    for (VertexId v = 0; v < n; ++v) {
      for (std::size_t i = member_offsets[v]; i < member_offsets[v + 1]; ++i) {
        sorted[fill[membership[i]]++] = v;
      }
    }
  }

  // Lexicographic order on the sorted lists; the first two vertices already
  // identify a block, since distinct blocks share at most one vertex.
  std::vector<std::uint32_t> order(x);
  for (std::uint32_t b = 0; b < x; ++b) order[b] = b;
  auto nth = [&](std::uint32_t b, std::size_t i) -> std::size_t {
    const std::size_t pos = raw.offsets[b] + i;
    return pos < raw.offsets[b + 1] ? sorted[pos] : 0;
  };
  counting_sort(order, n, [&](std::uint32_t b) { return nth(b, 1); });
  counting_sort(order, n, [&](std::uint32_t b) { return nth(b, 0); });

  BlockCutTree tree;
  tree.block_vertices_.reserve(raw.vertices.size());
  tree.block_edges_.reserve(x);
  for (std::uint32_t b : order) {
    tree.block_vertices_.insert(tree.block_vertices_.end(),
                                sorted.begin() + raw.offsets[b],
                                sorted.begin() + raw.offsets[b + 1]);
    tree.block_offsets_.push_back(tree.block_vertices_.size());
    tree.block_edges_.push_back(raw.edge_counts[b]);
  }

  tree.cut_index_.assign(n, BlockCutTree::kNotCut);
  for (VertexId v = 0; v < n; ++v) {
    if (member_offsets[v + 1] - member_offsets[v] >= 2) {
      tree.cut_index_[v] = static_cast<std::uint32_t>(tree.cut_vertices_.size());
      tree.cut_vertices_.push_back(v);
    }
  }
  const std::size_t y = tree.cut_vertices_.size();

  std::vector<std::size_t> cut_degree(y, 0);
  for (BlockId b = 0; b < x; ++b) {
    for (VertexId v : tree.block(b)) {
      if (tree.is_cut_vertex(v)) {
        tree.block_cuts_.push_back(tree.cut_index_[v]);
        ++cut_degree[tree.cut_index_[v]];
      }
    }
    tree.block_cut_offsets_.push_back(tree.block_cuts_.size());
  }
  tree.cut_block_offsets_.resize(y + 1, 0);
  for (std::size_t c = 0; c < y; ++c) {
    tree.cut_block_offsets_[c + 1] = tree.cut_block_offsets_[c] + cut_degree[c];
  }
  tree.cut_blocks_.resize(tree.cut_block_offsets_[y]);
  std::vector<std::size_t> fill(tree.cut_block_offsets_.begin(),
                                tree.cut_block_offsets_.end() - 1);
  for (BlockId b = 0; b < x; ++b) {
    for (std::uint32_t c : tree.block_cut_neighbors(b)) {
      tree.cut_blocks_[fill[c]++] = b;
    }
  }

  tree.elimination_order_ = pendant_elimination_order(tree);
  return tree;
}

std::optional<BlockId> first_non_clique_block(const BlockCutTree& tree) {
  for (BlockId b = 0; b < tree.block_count(); ++b) {
    const std::size_t k = tree.block(b).size();
    if (tree.block_edge_count(b) != k * (k - 1) / 2) return b;
  }
  return std::nullopt;
}

bool is_block_graph(const BlockCutTree& tree) {
  return !first_non_clique_block(tree).has_value();
}

bool is_block_graph(const WeightedGraph& g) {
  return is_block_graph(find_blocks(g));
}

std::vector<BlockId> pendant_elimination_order(const BlockCutTree& tree) {
  const std::size_t x = tree.block_count();
  std::vector<BlockId> order;
  order.reserve(x);

  std::vector<std::size_t> block_degree(x);
  for (BlockId b = 0; b < x; ++b) {
    block_degree[b] = tree.block_cut_neighbors(b).size();
  }
  std::vector<std::size_t> cut_degree(tree.cut_vertex_count());
  for (std::uint32_t c = 0; c < cut_degree.size(); ++c) {
    cut_degree[c] = tree.cut_block_neighbors(c).size();
  }
  std::vector<char> removed(x, 0);

  // Removes leaf b; returns the block that turned into a leaf, if any. At
  // most one can, because b has at most one remaining cut vertex.
  auto remove = [&](BlockId b) -> std::optional<BlockId> {
    order.push_back(b);
    removed[b] = 1;
    for (std::uint32_t c : tree.block_cut_neighbors(b)) {
      if (cut_degree[c] < 2) continue;
      if (--cut_degree[c] != 1) continue;
      for (BlockId other : tree.cut_block_neighbors(c)) {
        if (removed[other]) continue;
        if (--block_degree[other] <= 1) return other;
        break;
      }
    }
    return std::nullopt;
  };

  // Prüfer-style sweep: a leaf that appears behind the cursor is the
  // smallest eligible one and is removed immediately.
  for (BlockId cursor = 1; cursor < x; ++cursor) {
    if (removed[cursor] || block_degree[cursor] > 1) continue;
    std::optional<BlockId> next = remove(cursor);
    while (next && *next != 0 && *next < cursor) next = remove(*next);
  }
  if (x > 0) order.push_back(0);
  return order;
}

std::string to_dot(const BlockCutTree& tree) {
  std::ostringstream out;
  out << "graph block_cut_tree {\n";
  for (BlockId b = 0; b < tree.block_count(); ++b) {
    out << "  b" << b << " [shape=box,label=\"B" << b << ":";
    for (VertexId v : tree.block(b)) out << ' ' << v + 1;
    out << "\"];\n";
  }
  for (VertexId c : tree.cut_vertices()) {
    out << "  c" << c + 1 << " [shape=circle,label=\"" << c + 1 << "\"];\n";
  }
  for (BlockId b = 0; b < tree.block_count(); ++b) {
    for (std::uint32_t c : tree.block_cut_neighbors(b)) {
      out << "  b" << b << " -- c" << tree.cut_vertices()[c] + 1 << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace blockpd
