#include "blockpd/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "blockpd/error.hpp"

namespace blockpd::oracle {
namespace {

using Mask = std::uint32_t;

struct BitGraph {
  std::size_t n = 0;
  std::vector<Mask> open;    // N(v)
  std::vector<Mask> closed;  // N[v]
  std::vector<Weight> weight;

  explicit BitGraph(const WeightedGraph& g)
      : n(g.vertex_count()), open(n, 0), closed(n, 0), weight(n, 0) {
    for (VertexId v = 0; v < n; ++v) {
      for (VertexId w : g.neighbors(v)) open[v] |= Mask{1} << w;
      closed[v] = open[v] | (Mask{1} << v);
      weight[v] = g.weight(v);
    }
  }

  Mask all() const { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

  Weight weight_of(Mask s) const {
    Weight total = 0;
    for (Mask rest = s; rest; rest &= rest - 1) {
      total += weight[std::countr_zero(rest)];
    }
    return total;
  }

  Mask dominated_by(Mask s) const {
    Mask d = 0;
    for (Mask rest = s; rest; rest &= rest - 1) {
      d |= closed[std::countr_zero(rest)];
    }
    return d;
  }

  // Pair the lowest vertex with each available neighbor in turn.
  bool perfectly_matchable(Mask s) const {
    if (s == 0) return true;
    if (std::popcount(s) % 2 != 0) return false;
    const int v = std::countr_zero(s);
    const Mask rest = s & ~(Mask{1} << v);
    for (Mask cand = open[v] & rest; cand; cand &= cand - 1) {
      const int w = std::countr_zero(cand);
      if (perfectly_matchable(rest & ~(Mask{1} << w))) return true;
    }
    return false;
  }
};

VertexSet to_set(const WeightedGraph& g, Mask s) {
  std::vector<VertexId> members;
  for (Mask rest = s; rest; rest &= rest - 1) {
    members.push_back(static_cast<VertexId>(std::countr_zero(rest)));
  }
  return VertexSet::of(g, std::move(members));
}

// Next larger mask with the same popcount.
Mask next_same_popcount(Mask s) {
  const Mask low = s & (~s + 1);
  const Mask ripple = s + low;
  return ripple | (((s ^ ripple) >> 2) / low);
}

}  // namespace

std::optional<OracleSolution> min_pds(const WeightedGraph& g,
                                      const OracleOptions& options) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxPdsVertices) {
    throw Error(ErrorCode::kTooLarge,
                "oracle is limited to " + std::to_string(kMaxPdsVertices) +
                    " vertices, got " + std::to_string(n));
  }
  const BitGraph bg(g);
  const Mask all = bg.all();
  std::optional<Mask> best;
  Weight best_weight = 0;

  for (std::size_t size = 2; size <= n; size += 2) {
    const Mask last = all & ~((Mask{1} << (n - size)) - 1);
    for (Mask s = (Mask{1} << size) - 1;; s = next_same_popcount(s)) {
      const Weight w = bg.weight_of(s);
      const bool lighter = !best || w < best_weight;
      if (lighter || !options.prune_by_weight) {
        if (bg.dominated_by(s) == all && bg.perfectly_matchable(s) &&
            lighter) {
          best = s;
          best_weight = w;
        }
      }
      if (s == last) break;
    }
  }
  if (!best) return std::nullopt;
  return OracleSolution{to_set(g, *best), best_weight};
}

ExtendedWeight state(const WeightedGraph& g, VertexId u, StateKind kind) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxStateVertices) {
    throw Error(ErrorCode::kTooLarge,
                "state oracle is limited to " +
                    std::to_string(kMaxStateVertices) + " vertices");
  }
  if (u >= n) throw Error(ErrorCode::kOutOfRange, "root not in graph");
  const BitGraph bg(g);
  const Mask all = bg.all();
  const Mask root = Mask{1} << u;
  ExtendedWeight best = kInfeasible;

  for (Mask s = 0;; ++s) {
    bool ok = false;
    switch (kind) {
      case StateKind::kD:
        ok = (s & root) && bg.dominated_by(s) == all &&
             bg.perfectly_matchable(s & ~root);
        break;
      case StateKind::kP:
        ok = (s & root) && bg.dominated_by(s) == all &&
             bg.perfectly_matchable(s);
        break;
      case StateKind::kPPrime:
        ok = !(s & root) && bg.dominated_by(s) == all &&
             bg.perfectly_matchable(s);
        break;
      case StateKind::kPBar: {
        const Mask d = bg.dominated_by(s);
        ok = !(d & root) && (d | root) == all && bg.perfectly_matchable(s);
        break;
      }
    }
    if (ok) best = std::min(best, ExtendedWeight(bg.weight_of(s)));
    if (s == all) break;
  }
  return best;
}

namespace {

// Block graph as a list of cliques glued at single vertices.
struct Gluing {
  std::size_t n = 0;
  std::vector<std::vector<VertexId>> blocks;
};

// AHU code of the block-cut-vertex tree rooted at `node`. Block nodes carry
// their size; cut-vertex nodes are unlabeled.
std::string rooted_code(const std::vector<std::vector<std::size_t>>& adj,
                        const std::vector<std::size_t>& label, std::size_t node,
                        std::size_t parent) {
  std::vector<std::string> parts;
  for (std::size_t next : adj[node]) {
    if (next != parent) parts.push_back(rooted_code(adj, label, next, node));
  }
  std::sort(parts.begin(), parts.end());
  std::string code = label[node] == 0 ? "c(" : "b" + std::to_string(label[node]) + "(";
  for (const auto& p : parts) code += p;
  return code + ")";
}

std::string canonical_code(const Gluing& gl) {
  std::vector<std::size_t> count(gl.n, 0);
  for (const auto& b : gl.blocks) {
    for (VertexId v : b) ++count[v];
  }
  std::vector<std::size_t> cut_node(gl.n, 0);
  std::vector<std::size_t> label;
  for (const auto& b : gl.blocks) label.push_back(b.size());
  for (VertexId v = 0; v < gl.n; ++v) {
    if (count[v] >= 2) {
      cut_node[v] = label.size();
      label.push_back(0);
    }
  }
  std::vector<std::vector<std::size_t>> adj(label.size());
  for (std::size_t b = 0; b < gl.blocks.size(); ++b) {
    for (VertexId v : gl.blocks[b]) {
      if (count[v] >= 2) {
        adj[b].push_back(cut_node[v]);
        adj[cut_node[v]].push_back(b);
      }
    }
  }
  std::string best;
  for (std::size_t root = 0; root < label.size(); ++root) {
    std::string code = rooted_code(adj, label, root, label.size());
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

void grow(Gluing& gl, std::size_t n_max, std::map<std::string, Gluing>& seen) {
  seen.try_emplace(std::to_string(gl.n) + ":" + canonical_code(gl), gl);
  for (VertexId at = 0; at < gl.n; ++at) {
    for (std::size_t size = 2; gl.n + size - 1 <= n_max; ++size) {
      std::vector<VertexId> block{at};
      for (std::size_t i = 0; i + 1 < size; ++i) {
        block.push_back(static_cast<VertexId>(gl.n + i));
      }
      const std::size_t old_n = gl.n;
      gl.n += size - 1;
      gl.blocks.push_back(std::move(block));
      grow(gl, n_max, seen);
      gl.blocks.pop_back();
      gl.n = old_n;
    }
  }
}

WeightedGraph to_graph(const Gluing& gl) {
  std::vector<Edge> edges;
  for (const auto& b : gl.blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        edges.emplace_back(b[i], b[j]);
      }
    }
  }
  return WeightedGraph::build(gl.n, std::vector<Weight>(gl.n, 1), edges);
}

}  // namespace

void enumerate_block_graphs(
    std::size_t n_max, const std::function<void(const WeightedGraph&)>& visit) {
  if (n_max > 8) {
    throw Error(ErrorCode::kTooLarge, "enumeration is limited to 8 vertices");
  }
  // Keys sort by vertex count first: counts are single digits.
  std::map<std::string, Gluing> seen;
  for (std::size_t size = 2; size <= n_max; ++size) {
    Gluing gl;
    gl.n = size;
    std::vector<VertexId> first(size);
    for (VertexId v = 0; v < size; ++v) first[v] = v;
    gl.blocks.push_back(std::move(first));
    grow(gl, n_max, seen);
  }
  for (const auto& [key, gl] : seen) visit(to_graph(gl));
}

std::vector<WeightedGraph> enumerate_block_graphs(std::size_t n_max) {
  std::vector<WeightedGraph> out;
  enumerate_block_graphs(n_max,
                         [&](const WeightedGraph& g) { out.push_back(g); });
  return out;
}

}  // namespace blockpd::oracle
