#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blockpd/block_tree.hpp"
#include "blockpd/graph.hpp"
#include "blockpd/weight.hpp"

namespace blockpd {

// The four rooted optima kept per vertex u of a processed subgraph H:
//   kD      u in S, S dominates H, H[S - u] has a perfect matching
//   kP      u in S, S is a paired-dominating set of H
//   kPPrime u not in S, S is a paired-dominating set of H
//   kPBar   S is a paired-dominating set of H - u and leaves u undominated
enum class StateKind : std::uint8_t { kD = 0, kP = 1, kPPrime = 2, kPBar = 3 };

inline constexpr std::array<StateKind, 4> kAllStateKinds = {
    StateKind::kD, StateKind::kP, StateKind::kPPrime, StateKind::kPBar};

constexpr std::size_t index(StateKind k) { return static_cast<std::size_t>(k); }
std::string_view to_string(StateKind kind);

// Which candidate set realized a merged state.
enum class Candidate : std::uint8_t {
  kInfeasible,
  kInitial,
  kX, kXPlus, kXMinus,
  kY, kYPlus, kYMinus,
  kZ1, kZ1Plus, kZ1Minus,
  kT1, kT2, kT3, kT4, kT5, kT6, kT7, kT8,
  kZ2, kZ2Plus, kZ2Minus,
  kT9, kT10, kT11, kT12,
  kPBarComposition,
};
std::string_view to_string(Candidate c);

struct ChildOverride {
  std::uint32_t child = 0;  // position in the block's child list
  StateKind kind = StateKind::kD;
};

// How a merged state is assembled from the states below it: the kind taken
// at the block's root (G1), and for each child either its best kind or a
// replacement. Constant size, so a trace costs O(n) memory overall.
struct ChoiceRecord {
  Candidate candidate = Candidate::kInfeasible;
  StateKind g1_kind = StateKind::kD;
  // Children whose best kind is kPBar take kPPrime instead.
  bool pbar_children_to_pprime = false;
  // Every child takes kPPrime.
  bool all_children_to_pprime = false;
  std::uint8_t override_count = 0;
  std::array<ChildOverride, 2> overrides{};

  StateKind child_kind(std::uint32_t child, StateKind best) const;
  void add_override(std::uint32_t child, StateKind kind);
};

struct StateQuad {
  VertexId owner = 0;
  std::array<ExtendedWeight, 4> weight{kInfeasible, kInfeasible, kInfeasible,
                                       kInfeasible};
  std::array<ChoiceRecord, 4> choice{};

  ExtendedWeight operator[](StateKind k) const { return weight[index(k)]; }

  // D = {v}, P = P' = infeasible, PBar = {}.
  static StateQuad initial(VertexId v, Weight w);
};

std::vector<StateQuad> init_states(const WeightedGraph& g);

enum class Q1Case : std::uint8_t { kC1 = 1, kC2, kC3, kC4, kC5, kC6, kC7, kC8 };
enum class Q2Case : std::uint8_t { kC9 = 9, kC10, kC11, kC12, kC13, kC14 };

// Per-block selectors over the children u_2..u_k (here positions 0..k-2).
struct MergeContext {
  // Best state of each child, ties resolved in the order D, P, P', PBar.
  std::vector<StateKind> best_kind;
  std::vector<std::array<ExtendedWeight, 4>> weights;
  // Sum of the best weights over all children.
  ExtendedWeight base_weight = ExtendedWeight::zero();
  // Number of children whose best state is D.
  std::size_t d_count = 0;
  bool has_p_child = false;
  // Children whose best state is PBar.
  std::vector<std::uint32_t> pbar_children;
  // Sum over pbar_children of w(P') - w(PBar).
  ExtendedWeight pbar_to_pprime_cost = ExtendedWeight::zero();

  // Best child not in D by w(D) - w(best), and the runner-up.
  std::optional<std::uint32_t> alpha, alpha_prime;
  // Best child in D by w(min(P, P', PBar)) - w(D).
  std::optional<std::uint32_t> beta;
  // min(P, P', PBar) at beta, ties in the same order.
  StateKind beta_replacement = StateKind::kP;
  // Best child not in P by w(P) - w(best), and the runner-up.
  std::optional<std::uint32_t> gamma, gamma_prime;

  std::size_t child_count() const { return best_kind.size(); }
  ExtendedWeight best_weight(std::uint32_t i) const {
    return weights[i][index(best_kind[i])];
  }
  ExtendedWeight weight(std::uint32_t i, StateKind k) const {
    return weights[i][index(k)];
  }
  bool has_pbar_child() const { return !pbar_children.empty(); }

  // The gamma used together with beta: never equal to beta.
  std::optional<std::uint32_t> gamma_excluding_beta() const;

  // Exactly one case holds for every context; throws kInternalInconsistency
  // otherwise.
  Q1Case q1_case() const;
  Q2Case q2_case() const;

  std::string describe() const;
};

MergeContext build_merge_context(std::span<const StateQuad> children);

struct MergeResult {
  ExtendedWeight weight = kInfeasible;
  ChoiceRecord choice;
};

// Optimal states at the block root u1, given u1's own state `g1` over what
// was processed below it and the children's context.
MergeResult merge_D(const StateQuad& g1, const MergeContext& ctx);
MergeResult merge_P(const StateQuad& g1, const MergeContext& ctx);
// P' restricted to sets extending P'(G1) and PBar(G1) respectively.
MergeResult merge_Q1(const StateQuad& g1, const MergeContext& ctx);
MergeResult merge_Q2(const StateQuad& g1, const MergeContext& ctx);
MergeResult merge_Pprime(const StateQuad& g1, const MergeContext& ctx);
MergeResult merge_Pbar(const StateQuad& g1, const MergeContext& ctx);

// All four merges; result.owner is g1.owner.
StateQuad merge_block(const StateQuad& g1, const MergeContext& ctx);

// A stored state: `node` is the merge that produced it, or kInitialNode for
// a vertex that has not been a block root yet.
struct StateRef {
  static constexpr std::int32_t kInitialNode = -1;
  VertexId vertex = 0;
  std::int32_t node = kInitialNode;
  StateKind kind = StateKind::kD;
};

// Every merge performed by solve(), enough to rebuild any stored state.
class DpTrace {
 public:
  struct Node {
    BlockId block = 0;
    VertexId root = 0;
    std::int32_t previous = StateRef::kInitialNode;  // root's prior state
    std::size_t child_begin = 0;
    std::size_t child_end = 0;
    std::array<ExtendedWeight, 4> weight{};
    std::array<ChoiceRecord, 4> choice{};
  };

  std::size_t node_count() const { return nodes_.size(); }
  const Node& node(std::int32_t id) const { return nodes_[id]; }
  std::span<const VertexId> children(std::int32_t id) const;
  std::span<const StateKind> child_best_kinds(std::int32_t id) const;

  ExtendedWeight stored_weight(const WeightedGraph& g, StateRef ref) const;

  // Emits the set behind `ref`. Throws kInternalInconsistency if the state
  // is infeasible or the rebuilt weight differs from the stored one.
  VertexSet reconstruct(const WeightedGraph& g, StateRef ref) const;

  // Adds a node and returns its id.
  std::int32_t add_node(BlockId block, VertexId root, std::int32_t previous,
                        std::span<const VertexId> child_vertices,
                        std::span<const std::int32_t> child_nodes,
                        const MergeContext& ctx, const StateQuad& result);

 private:
  std::vector<Node> nodes_;
  std::vector<VertexId> child_vertex_;
  std::vector<std::int32_t> child_node_;
  std::vector<StateKind> child_best_;
};

struct MergeEvent {
  BlockId block;
  VertexId root;
  std::int32_t node;
  const StateQuad& result;
  const MergeContext& context;
  const DpTrace& trace;
};

struct SolveOptions {
  // Root of the last block; defaults to its smallest vertex. Must lie in
  // the last block.
  std::optional<VertexId> final_root;
  // Called after each pendant-block merge (not for the last block).
  std::function<void(const MergeEvent&)> on_merge;
};

struct Solution {
  VertexSet set;
  Weight weight = 0;
  VertexId root = 0;
  StateKind root_kind = StateKind::kP;
  ExtendedWeight p_weight = kInfeasible;
  ExtendedWeight pprime_weight = kInfeasible;
  std::size_t block_count = 0;
  // Sum of block sizes over all merges, including the last block.
  std::size_t merge_work = 0;
};

// Minimum-weight paired-dominating set of a connected block graph.
// Throws Error with kNoPairedDominatingSet (n < 2), kDisconnected or
// kNotBlockGraph.
Solution solve(const WeightedGraph& g, const SolveOptions& options = {});
// Same, reusing a precomputed block-cut-vertex tree of g.
Solution solve(const WeightedGraph& g, const BlockCutTree& tree,
               const SolveOptions& options = {});

}  // namespace blockpd
