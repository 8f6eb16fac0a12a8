#include "blockpd/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "blockpd/error.hpp"

namespace blockpd {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kWeightOverflow: return "WeightOverflow";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kNotBlockGraph: return "NotBlockGraph";
    case ErrorCode::kNoPairedDominatingSet: return "NoPairedDominatingSet";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

WeightedGraph WeightedGraph::build(std::size_t n, std::vector<Weight> weights,
                                   std::span<const Edge> edges) {
  if (weights.size() != n) {
    throw Error(ErrorCode::kOutOfRange,
                "expected " + std::to_string(n) + " weights, got " +
                    std::to_string(weights.size()));
  }
  if (n > std::numeric_limits<VertexId>::max()) {
    throw Error(ErrorCode::kOutOfRange, "too many vertices");
  }

  WeightedGraph g;
  // The maximum value is reserved for the infeasible sentinel.
  constexpr Weight kLimit = std::numeric_limits<Weight>::max();
  for (Weight w : weights) {
    if (w >= kLimit - g.total_weight_) {
      throw Error(ErrorCode::kWeightOverflow,
                  "sum of vertex weights does not fit in 64 bits");
    }
    g.total_weight_ += w;
  }
  g.weights_ = std::move(weights);

  std::vector<std::size_t> degree(n, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kOutOfRange,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") references a vertex outside [0, " +
                      std::to_string(n) + ")");
    }
    if (u == v) {
      throw Error(ErrorCode::kSelfLoop,
                  "self loop at vertex " + std::to_string(u));
    }
    ++degree[u];
    ++degree[v];
  }

  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  }
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adjacency_[fill[u]++] = v;
    g.adjacency_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.adjacency_.begin() + g.offsets_[v];
    auto last = g.adjacency_.begin() + g.offsets_[v + 1];
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "duplicate edge (" + std::to_string(v) + ", " +
                      std::to_string(*dup) + ")");
    }
    g.max_degree_ = std::max(g.max_degree_, degree[v]);
  }
  return g;
}

bool WeightedGraph::adjacent(VertexId u, VertexId v) const {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet VertexSet::of(const WeightedGraph& g, std::vector<VertexId> members) {
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw Error(ErrorCode::kInvalidArgument, "vertex set has repeated ids");
  }
  VertexSet s;
  for (VertexId v : members) {
    if (v >= g.vertex_count()) {
      throw Error(ErrorCode::kOutOfRange,
                  "vertex " + std::to_string(v) + " is not in the graph");
    }
    s.total_weight += g.weight(v);
  }
  s.members = std::move(members);
  return s;
}

bool is_connected(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

bool is_dominating_set(const WeightedGraph& g, const VertexSet& s) {
  std::vector<char> dominated(g.vertex_count(), 0);
  for (VertexId v : s.members) {
    dominated[v] = 1;
    for (VertexId w : g.neighbors(v)) dominated[w] = 1;
  }
  return std::all_of(dominated.begin(), dominated.end(),
                     [](char d) { return d != 0; });
}

bool has_perfect_matching(const WeightedGraph& g, const VertexSet& s) {
  const std::size_t k = s.size();
  if (k % 2 != 0) return false;
  if (k == 0) return true;

  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> local(g.vertex_count(), kNone);
  for (std::uint32_t i = 0; i < k; ++i) local[s.members[i]] = i;

  std::vector<std::size_t> start(k + 1, 0);
  std::vector<std::uint32_t> adj;
  for (std::uint32_t i = 0; i < k; ++i) {
    for (VertexId w : g.neighbors(s.members[i])) {
      if (local[w] != kNone) adj.push_back(local[w]);
    }
    start[i + 1] = adj.size();
  }

  std::vector<char> matched(k, 0);
  std::vector<std::size_t> free_degree(k);
  std::vector<std::uint32_t> forced;
  for (std::uint32_t i = 0; i < k; ++i) {
    free_degree[i] = start[i + 1] - start[i];
    if (free_degree[i] == 0) return false;
    if (free_degree[i] == 1) forced.push_back(i);
  }

  // A vertex with one unmatched neighbor must be matched to it.
  auto match_pair = [&](std::uint32_t a, std::uint32_t b) {
    matched[a] = matched[b] = 1;
    for (std::uint32_t x : {a, b}) {
      for (std::size_t e = start[x]; e < start[x + 1]; ++e) {
        std::uint32_t w = adj[e];
        if (matched[w]) continue;
        if (--free_degree[w] == 0) return false;
        if (free_degree[w] == 1) forced.push_back(w);
      }
    }
    return true;
  };
  while (!forced.empty()) {
    std::uint32_t v = forced.back();
    forced.pop_back();
    if (matched[v]) continue;
    std::uint32_t partner = kNone;
    for (std::size_t e = start[v]; e < start[v + 1]; ++e) {
      if (!matched[adj[e]]) {
        partner = adj[e];
        break;
      }
    }
    if (partner == kNone) return false;
    if (!match_pair(v, partner)) return false;
  }

  auto next_free = [&](std::uint32_t from) {
    while (from < k && matched[from]) ++from;
    return from;
  };
  struct Frame {
    std::uint32_t vertex;
    std::size_t next_edge;
    std::uint32_t partner;
  };
  std::uint32_t first = next_free(0);
  if (first == k) return true;
  std::vector<Frame> stack{{first, start[first], kNone}};
  matched[first] = 1;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.partner != kNone) {
      matched[f.partner] = 0;
      f.partner = kNone;
    }
    while (f.next_edge < start[f.vertex + 1] && matched[adj[f.next_edge]]) {
      ++f.next_edge;
    }
    if (f.next_edge == start[f.vertex + 1]) {
      matched[f.vertex] = 0;
      stack.pop_back();
      continue;
    }
    f.partner = adj[f.next_edge++];
    matched[f.partner] = 1;
    std::uint32_t v = next_free(f.vertex + 1);
    if (v == k) return true;
    matched[v] = 1;
    stack.push_back({v, start[v], kNone});
  }
  return false;
}

bool is_paired_dominating_set(const WeightedGraph& g, const VertexSet& s) {
  if (g.vertex_count() == 0) return true;
  if (s.empty()) return false;
  return is_dominating_set(g, s) && has_perfect_matching(g, s);
}

WeightedGraph induced_subgraph(const WeightedGraph& g,
                               std::span<const VertexId> vertices) {
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> local(g.vertex_count(), kNone);
  std::vector<Weight> weights;
  weights.reserve(vertices.size());
  for (std::uint32_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.vertex_count()) {
      throw Error(ErrorCode::kOutOfRange, "vertex not in graph");
    }
    if (local[vertices[i]] != kNone) {
      throw Error(ErrorCode::kInvalidArgument, "repeated vertex");
    }
    local[vertices[i]] = i;
    weights.push_back(g.weight(vertices[i]));
  }
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < vertices.size(); ++i) {
    for (VertexId w : g.neighbors(vertices[i])) {
      if (local[w] != kNone && i < local[w]) edges.emplace_back(i, local[w]);
    }
  }
  return WeightedGraph::build(vertices.size(), std::move(weights), edges);
}

}  // namespace blockpd
