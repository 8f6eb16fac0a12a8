#include "blockpd/dp.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>

#include "blockpd/error.hpp"

namespace blockpd {

std::string_view to_string(StateKind kind) {
  switch (kind) {
    case StateKind::kD: return "D";
    case StateKind::kP: return "P";
    case StateKind::kPPrime: return "P'";
    case StateKind::kPBar: return "Pbar";
  }
  return "?";
}

std::string_view to_string(Candidate c) {
  switch (c) {
    case Candidate::kInfeasible: return "infeasible";
    case Candidate::kInitial: return "initial";
    case Candidate::kX: return "X";
    case Candidate::kXPlus: return "X+";
    case Candidate::kXMinus: return "X-";
    case Candidate::kY: return "Y";
    case Candidate::kYPlus: return "Y+";
    case Candidate::kYMinus: return "Y-";
    case Candidate::kZ1: return "Z1";
    case Candidate::kZ1Plus: return "Z1+";
    case Candidate::kZ1Minus: return "Z1-";
    case Candidate::kT1: return "T1";
    case Candidate::kT2: return "T2";
    case Candidate::kT3: return "T3";
    case Candidate::kT4: return "T4";
    case Candidate::kT5: return "T5";
    case Candidate::kT6: return "T6";
    case Candidate::kT7: return "T7";
    case Candidate::kT8: return "T8";
    case Candidate::kZ2: return "Z2";
    case Candidate::kZ2Plus: return "Z2+";
    case Candidate::kZ2Minus: return "Z2-";
    case Candidate::kT9: return "T9";
    case Candidate::kT10: return "T10";
    case Candidate::kT11: return "T11";
    case Candidate::kT12: return "T12";
    case Candidate::kPBarComposition: return "Pbar-composition";
  }
  return "?";
}

StateKind ChoiceRecord::child_kind(std::uint32_t child, StateKind best) const {
  for (std::uint8_t i = 0; i < override_count; ++i) {
    if (overrides[i].child == child) return overrides[i].kind;
  }
  if (all_children_to_pprime) return StateKind::kPPrime;
  if (pbar_children_to_pprime && best == StateKind::kPBar) {
    return StateKind::kPPrime;
  }
  return best;
}

void ChoiceRecord::add_override(std::uint32_t child, StateKind kind) {
  if (override_count == overrides.size()) {
    throw Error(ErrorCode::kInternalInconsistency, "too many overrides");
  }
  overrides[override_count++] = {child, kind};
}

StateQuad StateQuad::initial(VertexId v, Weight w) {
  StateQuad q;
  q.owner = v;
  q.weight[index(StateKind::kD)] = ExtendedWeight(w);
  q.weight[index(StateKind::kPBar)] = ExtendedWeight::zero();
  for (StateKind k : {StateKind::kD, StateKind::kPBar}) {
    q.choice[index(k)].candidate = Candidate::kInitial;
  }
  return q;
}

std::vector<StateQuad> init_states(const WeightedGraph& g) {
  std::vector<StateQuad> quads;
  quads.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    quads.push_back(StateQuad::initial(v, g.weight(v)));
  }
  return quads;
}

namespace {

// Keeps the two smallest (delta, index) pairs; earlier index wins ties.
struct TopTwo {
  std::optional<std::uint32_t> first, second;
  ExtendedWeight first_delta = kInfeasible, second_delta = kInfeasible;

  void offer(std::uint32_t i, ExtendedWeight delta) {
    if (!first || delta < first_delta) {
      second = first;
      second_delta = first_delta;
      first = i;
      first_delta = delta;
    } else if (!second || delta < second_delta) {
      second = i;
      second_delta = delta;
    }
  }
};

// Lightest of the listed kinds at child i, ties to the earlier kind.
StateKind lightest(const std::array<ExtendedWeight, 4>& w,
                   std::initializer_list<StateKind> kinds) {
  StateKind best = *kinds.begin();
  for (StateKind k : kinds) {
    if (w[index(k)] < w[index(best)]) best = k;
  }
  return best;
}

ExtendedWeight difference(ExtendedWeight to, ExtendedWeight from) {
  if (to.is_infeasible() || from.is_infeasible()) return kInfeasible;
  return ExtendedWeight(to.value() - from.value());
}

}  // namespace

MergeContext build_merge_context(std::span<const StateQuad> children) {
  MergeContext ctx;
  const auto k = static_cast<std::uint32_t>(children.size());
  ctx.best_kind.reserve(k);
  ctx.weights.reserve(k);
  TopTwo alpha, gamma;
  std::optional<std::uint32_t> beta;
  ExtendedWeight beta_delta = kInfeasible;

  for (std::uint32_t i = 0; i < k; ++i) {
    const auto& w = children[i].weight;
    const StateKind best = lightest(w, {StateKind::kD, StateKind::kP,
                                        StateKind::kPPrime, StateKind::kPBar});
    const ExtendedWeight best_w = w[index(best)];
    ctx.best_kind.push_back(best);
    ctx.weights.push_back(w);
    ctx.base_weight += best_w;

    if (best == StateKind::kD) {
      ++ctx.d_count;
      const StateKind repl = lightest(
          w, {StateKind::kP, StateKind::kPPrime, StateKind::kPBar});
      const ExtendedWeight delta = difference(w[index(repl)], best_w);
      if (!beta || delta < beta_delta) {
        beta = i;
        beta_delta = delta;
      }
    } else {
      alpha.offer(i, difference(w[index(StateKind::kD)], best_w));
    }
    if (best == StateKind::kP) {
      ctx.has_p_child = true;
    } else {
      gamma.offer(i, difference(w[index(StateKind::kP)], best_w));
    }
    if (best == StateKind::kPBar) {
      ctx.pbar_children.push_back(i);
      ctx.pbar_to_pprime_cost +=
          difference(w[index(StateKind::kPPrime)], best_w);
    }
  }

  ctx.alpha = alpha.first;
  ctx.alpha_prime = alpha.second;
  ctx.gamma = gamma.first;
  ctx.gamma_prime = gamma.second;
  ctx.beta = beta;
  if (beta) {
    ctx.beta_replacement =
        lightest(ctx.weights[*beta],
                 {StateKind::kP, StateKind::kPPrime, StateKind::kPBar});
  }
  return ctx;
}

std::optional<std::uint32_t> MergeContext::gamma_excluding_beta() const {
  if (gamma && gamma != beta) return gamma;
  return gamma_prime;
}

namespace {

// Condition tuple entries: 1 holds, 0 fails, -1 don't care.
template <typename Case, std::size_t N>
struct CasePattern {
  Case which;
  std::array<int, N> bits;
};

template <typename Case, std::size_t N, std::size_t M>
Case match_case(const std::array<bool, N>& conditions,
                const std::array<CasePattern<Case, N>, M>& patterns,
                std::string_view family) {
  std::optional<Case> found;
  int matches = 0;
  for (const auto& p : patterns) {
    bool ok = true;
    for (std::size_t j = 0; j < N; ++j) {
      if (p.bits[j] >= 0 && p.bits[j] != static_cast<int>(conditions[j])) {
        ok = false;
        break;
      }
    }
    if (ok) {
      found = p.which;
      ++matches;
    }
  }
  if (matches != 1) {
    throw Error(ErrorCode::kInternalInconsistency,
                std::string(family) + ": " + std::to_string(matches) +
                    " cases match the condition tuple");
  }
  return *found;
}

}  // namespace

Q1Case MergeContext::q1_case() const {
  static constexpr std::array<CasePattern<Q1Case, 5>, 8> kPatterns = {{
      {Q1Case::kC1, {1, 1, -1, -1, -1}},
      {Q1Case::kC2, {1, 0, -1, -1, -1}},
      {Q1Case::kC3, {0, 1, 1, -1, 1}},
      {Q1Case::kC4, {0, 1, 1, -1, 0}},
      {Q1Case::kC5, {0, 1, 0, -1, -1}},
      {Q1Case::kC6, {0, 0, -1, 1, 1}},
      {Q1Case::kC7, {0, 0, -1, 1, 0}},
      {Q1Case::kC8, {0, 0, -1, 0, -1}},
  }};
  const std::array<bool, 5> conditions = {has_p_child, d_count % 2 == 1,
                                          d_count == 1, d_count == 0,
                                          has_pbar_child()};
  return match_case(conditions, kPatterns, "Q1");
}

Q2Case MergeContext::q2_case() const {
  static constexpr std::array<CasePattern<Q2Case, 4>, 6> kPatterns = {{
      {Q2Case::kC9, {1, 1, -1, -1}},
      {Q2Case::kC10, {1, 0, -1, -1}},
      {Q2Case::kC11, {0, 1, 1, -1}},
      {Q2Case::kC12, {0, 1, 0, -1}},
      {Q2Case::kC13, {0, 0, -1, 1}},
      {Q2Case::kC14, {0, 0, -1, 0}},
  }};
  const std::array<bool, 4> conditions = {has_p_child, d_count % 2 == 1,
                                          d_count == 1, d_count == 0};
  return match_case(conditions, kPatterns, "Q2");
}

std::string MergeContext::describe() const {
  std::ostringstream out;
  auto opt = [&](const char* name, std::optional<std::uint32_t> v) {
    out << ' ' << name << '=';
    if (v) {
      out << *v;
    } else {
      out << '-';
    }
  };
  out << "children=" << child_count() << " base=" << base_weight
      << " r=" << d_count << " has_p=" << has_p_child;
  opt("alpha", alpha);
  opt("alpha'", alpha_prime);
  opt("beta", beta);
  opt("gamma", gamma);
  opt("gamma'", gamma_prime);
  out << " beta_repl=" << to_string(beta_replacement) << " I={";
  for (std::size_t j = 0; j < pbar_children.size(); ++j) {
    out << (j ? "," : "") << pbar_children[j];
  }
  out << "} Q1=C" << static_cast<int>(q1_case()) << " Q2=C"
      << static_cast<int>(q2_case()) << '\n';
  for (std::uint32_t i = 0; i < child_count(); ++i) {
    out << "  child " << i << ": D=" << weights[i][0] << " P=" << weights[i][1]
        << " P'=" << weights[i][2] << " Pbar=" << weights[i][3]
        << " best=" << to_string(best_kind[i]) << '\n';
  }
  return out.str();
}

namespace {

// The base selection (every child at its best) with the root part of G1
// in state `g1_kind`.
MergeResult base_candidate(const StateQuad& g1, const MergeContext& ctx,
                           StateKind g1_kind, Candidate tag) {
  MergeResult r;
  r.weight = g1[g1_kind] + ctx.base_weight;
  r.choice.candidate = tag;
  r.choice.g1_kind = g1_kind;
  return r;
}

// Moves child i (if it exists) from its best state to `kind`.
MergeResult replace(MergeResult r, const MergeContext& ctx,
                    std::optional<std::uint32_t> child, StateKind kind) {
  if (!child) {
    r.weight = kInfeasible;
    return r;
  }
  const ExtendedWeight target = ctx.weight(*child, kind);
  if (r.weight.is_infeasible() || target.is_infeasible()) {
    r.weight = kInfeasible;
  } else {
    r.weight = r.weight.minus(ctx.best_weight(*child).value()) + target;
  }
  r.choice.add_override(*child, kind);
  return r;
}

// Moves every PBar child to P'.
MergeResult pbar_to_pprime(MergeResult r, const MergeContext& ctx) {
  r.weight += ctx.pbar_to_pprime_cost;
  r.choice.pbar_children_to_pprime = true;
  return r;
}

MergeResult with_tag(MergeResult r, Candidate tag) {
  r.choice.candidate = tag;
  return r;
}

// The lightest candidate, ties to the earliest listed.
MergeResult lightest(std::initializer_list<MergeResult> candidates) {
  MergeResult best = *candidates.begin();
  for (const MergeResult& c : candidates) {
    if (c.weight < best.weight) best = c;
  }
  if (best.weight.is_infeasible()) return MergeResult{};
  return best;
}

struct Family {
  MergeResult plain, plus, minus;
};

// S, (S with alpha moved to D), (S with beta moved to min(P, P', PBar)).
Family parity_family(const StateQuad& g1, const MergeContext& ctx,
                     StateKind g1_kind, Candidate plain_tag,
                     Candidate plus_tag, Candidate minus_tag) {
  Family f;
  f.plain = base_candidate(g1, ctx, g1_kind, plain_tag);
  f.plus = replace(with_tag(f.plain, plus_tag), ctx, ctx.alpha, StateKind::kD);
  f.minus = replace(with_tag(f.plain, minus_tag), ctx, ctx.beta,
                    ctx.beta_replacement);
  return f;
}

}  // namespace

MergeResult merge_D(const StateQuad& g1, const MergeContext& ctx) {
  const Family x = parity_family(g1, ctx, StateKind::kD, Candidate::kX,
                                 Candidate::kXPlus, Candidate::kXMinus);
  if (ctx.d_count % 2 == 0) return lightest({x.plain});
  return lightest({x.plus, x.minus});
}

MergeResult merge_P(const StateQuad& g1, const MergeContext& ctx) {
  const Family x = parity_family(g1, ctx, StateKind::kD, Candidate::kX,
                                 Candidate::kXPlus, Candidate::kXMinus);
  const Family y = parity_family(g1, ctx, StateKind::kP, Candidate::kY,
                                 Candidate::kYPlus, Candidate::kYMinus);
  if (ctx.d_count % 2 == 0) return lightest({x.plus, x.minus, y.plain});
  return lightest({x.plain, y.plus, y.minus});
}

MergeResult merge_Q1(const StateQuad& g1, const MergeContext& ctx) {
  const Family z = parity_family(g1, ctx, StateKind::kPPrime, Candidate::kZ1,
                                 Candidate::kZ1Plus, Candidate::kZ1Minus);
  const MergeResult& z1 = z.plain;
  const auto gamma_b = ctx.gamma_excluding_beta();

  switch (ctx.q1_case()) {
    case Q1Case::kC1:
    case Q1Case::kC5:
      return lightest({z.plus, z.minus});
    case Q1Case::kC2:
    case Q1Case::kC7:
    case Q1Case::kC8:
      return lightest({z1});
    case Q1Case::kC3: {
      const MergeResult t4 =
          replace(with_tag(z1, Candidate::kT4), ctx, ctx.beta, StateKind::kP);
      MergeResult t6 = replace(with_tag(z1, Candidate::kT6), ctx, gamma_b,
                               StateKind::kP);
      t6 = replace(t6, ctx, ctx.beta,
                   lightest(ctx.weights[*ctx.beta],
                            {StateKind::kPPrime, StateKind::kPBar}));
      const MergeResult t8 =
          replace(pbar_to_pprime(with_tag(z1, Candidate::kT8), ctx), ctx,
                  ctx.beta, StateKind::kPPrime);
      return lightest({z.plus, t4, t6, t8});
    }
    case Q1Case::kC4: {
      const MergeResult t5 =
          replace(with_tag(z1, Candidate::kT5), ctx, ctx.beta,
                  lightest(ctx.weights[*ctx.beta],
                           {StateKind::kP, StateKind::kPPrime}));
      MergeResult t7 = replace(with_tag(z1, Candidate::kT7), ctx, gamma_b,
                               StateKind::kP);
      t7 = replace(t7, ctx, ctx.beta, StateKind::kPBar);
      return lightest({z.plus, t5, t7});
    }
    case Q1Case::kC6: {
      const MergeResult t1 =
          replace(with_tag(z1, Candidate::kT1), ctx, ctx.gamma, StateKind::kP);
      MergeResult t2 =
          replace(with_tag(z1, Candidate::kT2), ctx, ctx.alpha, StateKind::kD);
      t2 = replace(t2, ctx, ctx.alpha_prime, StateKind::kD);
      const MergeResult t3 = pbar_to_pprime(with_tag(z1, Candidate::kT3), ctx);
      return lightest({t1, t2, t3});
    }
  }
  throw Error(ErrorCode::kInternalInconsistency, "unhandled Q1 case");
}

MergeResult merge_Q2(const StateQuad& g1, const MergeContext& ctx) {
  const Family z = parity_family(g1, ctx, StateKind::kPBar, Candidate::kZ2,
                                 Candidate::kZ2Plus, Candidate::kZ2Minus);
  const MergeResult& z2 = z.plain;

  switch (ctx.q2_case()) {
    case Q2Case::kC9:
    case Q2Case::kC12:
      return lightest({z.plus, z.minus});
    case Q2Case::kC10:
    case Q2Case::kC14:
      return lightest({z2});
    case Q2Case::kC11: {
      const MergeResult t11 =
          replace(with_tag(z2, Candidate::kT11), ctx, ctx.beta, StateKind::kP);
      MergeResult t12 = replace(with_tag(z2, Candidate::kT12), ctx,
                                ctx.gamma_excluding_beta(), StateKind::kP);
      t12 = replace(t12, ctx, ctx.beta,
                    lightest(ctx.weights[*ctx.beta],
                             {StateKind::kPPrime, StateKind::kPBar}));
      return lightest({z.plus, t11, t12});
    }
    case Q2Case::kC13: {
      const MergeResult t9 =
          replace(with_tag(z2, Candidate::kT9), ctx, ctx.gamma, StateKind::kP);
      MergeResult t10 =
          replace(with_tag(z2, Candidate::kT10), ctx, ctx.alpha, StateKind::kD);
      t10 = replace(t10, ctx, ctx.alpha_prime, StateKind::kD);
      return lightest({t9, t10});
    }
  }
  throw Error(ErrorCode::kInternalInconsistency, "unhandled Q2 case");
}

MergeResult merge_Pprime(const StateQuad& g1, const MergeContext& ctx) {
  return lightest({merge_Q1(g1, ctx), merge_Q2(g1, ctx)});
}

MergeResult merge_Pbar(const StateQuad& g1, const MergeContext& ctx) {
  MergeResult r;
  r.weight = g1[StateKind::kPBar];
  for (const auto& w : ctx.weights) r.weight += w[index(StateKind::kPPrime)];
  if (r.weight.is_infeasible()) return MergeResult{};
  r.choice.candidate = Candidate::kPBarComposition;
  r.choice.g1_kind = StateKind::kPBar;
  r.choice.all_children_to_pprime = true;
  return r;
}

StateQuad merge_block(const StateQuad& g1, const MergeContext& ctx) {
  StateQuad q;
  q.owner = g1.owner;
  const std::array<MergeResult, 4> results = {
      merge_D(g1, ctx), merge_P(g1, ctx), merge_Pprime(g1, ctx),
      merge_Pbar(g1, ctx)};
  for (StateKind k : kAllStateKinds) {
    q.weight[index(k)] = results[index(k)].weight;
    q.choice[index(k)] = results[index(k)].choice;
  }
  return q;
}

std::span<const VertexId> DpTrace::children(std::int32_t id) const {
  const Node& n = nodes_[id];
  return {child_vertex_.data() + n.child_begin,
          child_vertex_.data() + n.child_end};
}

std::span<const StateKind> DpTrace::child_best_kinds(std::int32_t id) const {
  const Node& n = nodes_[id];
  return {child_best_.data() + n.child_begin,
          child_best_.data() + n.child_end};
}

std::int32_t DpTrace::add_node(BlockId block, VertexId root,
                               std::int32_t previous,
                               std::span<const VertexId> child_vertices,
                               std::span<const std::int32_t> child_nodes,
                               const MergeContext& ctx,
                               const StateQuad& result) {
  Node n;
  n.block = block;
  n.root = root;
  n.previous = previous;
  n.child_begin = child_vertex_.size();
  child_vertex_.insert(child_vertex_.end(), child_vertices.begin(),
                       child_vertices.end());
  child_node_.insert(child_node_.end(), child_nodes.begin(),
                     child_nodes.end());
  child_best_.insert(child_best_.end(), ctx.best_kind.begin(),
                     ctx.best_kind.end());
  n.child_end = child_vertex_.size();
  n.weight = result.weight;
  n.choice = result.choice;
  nodes_.push_back(n);
  return static_cast<std::int32_t>(nodes_.size() - 1);
}

ExtendedWeight DpTrace::stored_weight(const WeightedGraph& g,
                                      StateRef ref) const {
  if (ref.node != StateRef::kInitialNode) {
    return nodes_[ref.node].weight[index(ref.kind)];
  }
  return StateQuad::initial(ref.vertex, g.weight(ref.vertex))[ref.kind];
}

VertexSet DpTrace::reconstruct(const WeightedGraph& g, StateRef ref) const {
  const ExtendedWeight expected = stored_weight(g, ref);
  if (expected.is_infeasible()) {
    throw Error(ErrorCode::kInternalInconsistency,
                "cannot rebuild an infeasible state");
  }
  std::vector<VertexId> members;
  std::vector<StateRef> pending{ref};
  while (!pending.empty()) {
    const StateRef cur = pending.back();
    pending.pop_back();
    if (cur.node == StateRef::kInitialNode) {
      if (cur.kind == StateKind::kD) {
        members.push_back(cur.vertex);
      } else if (cur.kind != StateKind::kPBar) {
        throw Error(ErrorCode::kInternalInconsistency,
                    "rebuild reached an infeasible initial state");
      }
      continue;
    }
    const Node& n = nodes_[cur.node];
    const ChoiceRecord& choice = n.choice[index(cur.kind)];
    if (choice.candidate == Candidate::kInfeasible) {
      throw Error(ErrorCode::kInternalInconsistency,
                  "rebuild reached an infeasible merged state");
    }
    pending.push_back({n.root, n.previous, choice.g1_kind});
    for (std::size_t j = n.child_begin; j < n.child_end; ++j) {
      const auto child = static_cast<std::uint32_t>(j - n.child_begin);
      pending.push_back({child_vertex_[j], child_node_[j],
                         choice.child_kind(child, child_best_[j])});
    }
  }
  VertexSet s = VertexSet::of(g, std::move(members));
  if (s.total_weight != expected.value()) {
    std::ostringstream msg;
    msg << "rebuilt weight " << s.total_weight << " differs from stored "
        << expected;
    throw Error(ErrorCode::kInternalInconsistency, msg.str());
  }
  return s;
}

Solution solve(const WeightedGraph& g, const SolveOptions& options) {
  if (g.vertex_count() < 2) {
    throw Error(ErrorCode::kNoPairedDominatingSet,
                "a graph with fewer than two vertices has no paired-dominating "
                "set");
  }
  return solve(g, find_blocks(g), options);
}

Solution solve(const WeightedGraph& g, const BlockCutTree& tree,
               const SolveOptions& options) {
  const std::size_t n = g.vertex_count();
  if (n < 2) {
    throw Error(ErrorCode::kNoPairedDominatingSet,
                "a graph with fewer than two vertices has no paired-dominating "
                "set");
  }
  if (auto bad = first_non_clique_block(tree)) {
    std::ostringstream msg;
    msg << "block " << *bad << " {";
    for (VertexId v : tree.block(*bad)) msg << ' ' << v + 1;
    msg << " } is not a clique";
    throw Error(ErrorCode::kNotBlockGraph, msg.str());
  }

  // Current state of every vertex: the latest merge rooted there.
  std::vector<std::array<ExtendedWeight, 4>> weights(n);
  std::vector<std::int32_t> node_of(n, StateRef::kInitialNode);
  for (VertexId v = 0; v < n; ++v) {
    weights[v] = StateQuad::initial(v, g.weight(v)).weight;
  }
  auto quad_of = [&](VertexId v) {
    StateQuad q;
    q.owner = v;
    q.weight = weights[v];
    return q;
  };

  std::vector<std::size_t> live_blocks(tree.cut_vertex_count());
  for (std::uint32_t c = 0; c < live_blocks.size(); ++c) {
    live_blocks[c] = tree.cut_block_neighbors(c).size();
  }

  DpTrace trace;
  Solution solution;
  solution.block_count = tree.block_count();
  std::vector<StateQuad> children;
  std::vector<VertexId> child_vertices;
  std::vector<std::int32_t> child_nodes;

  auto gather = [&](BlockId b, VertexId root) {
    children.clear();
    child_vertices.clear();
    child_nodes.clear();
    for (VertexId v : tree.block(b)) {
      if (v == root) continue;
      children.push_back(quad_of(v));
      child_vertices.push_back(v);
      child_nodes.push_back(node_of[v]);
    }
    solution.merge_work += tree.block(b).size();
  };

  const auto order = tree.elimination_order();
  for (std::size_t step = 0; step + 1 < order.size(); ++step) {
    const BlockId b = order[step];
    // The root is the one cut vertex still shared with an unprocessed block.
    std::optional<VertexId> root;
    for (std::uint32_t c : tree.block_cut_neighbors(b)) {
      if (live_blocks[c] >= 2) {
        if (root) {
          throw Error(ErrorCode::kInternalInconsistency,
                      "block " + std::to_string(b) + " is not pendant");
        }
        root = tree.cut_vertices()[c];
      }
    }
    if (!root) {
      throw Error(ErrorCode::kInternalInconsistency,
                  "block " + std::to_string(b) + " has no attaching vertex");
    }
    for (std::uint32_t c : tree.block_cut_neighbors(b)) --live_blocks[c];

    gather(b, *root);
    const MergeContext ctx = build_merge_context(children);
    const StateQuad result = merge_block(quad_of(*root), ctx);
    const std::int32_t id = trace.add_node(b, *root, node_of[*root],
                                           child_vertices, child_nodes, ctx,
                                           result);
    weights[*root] = result.weight;
    node_of[*root] = id;
    if (options.on_merge) {
      options.on_merge(MergeEvent{b, *root, id, result, ctx, trace});
    }
  }

  const BlockId last = order.back();
  const auto last_vertices = tree.block(last);
  const VertexId root = options.final_root.value_or(last_vertices.front());
  if (std::find(last_vertices.begin(), last_vertices.end(), root) ==
      last_vertices.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "final root " + std::to_string(root + 1) +
                    " is not in the last block");
  }
  gather(last, root);
  const MergeContext ctx = build_merge_context(children);
  const StateQuad g1 = quad_of(root);
  StateQuad final_quad;
  final_quad.owner = root;
  const MergeResult p = merge_P(g1, ctx);
  const MergeResult pprime = merge_Pprime(g1, ctx);
  final_quad.weight[index(StateKind::kP)] = p.weight;
  final_quad.choice[index(StateKind::kP)] = p.choice;
  final_quad.weight[index(StateKind::kPPrime)] = pprime.weight;
  final_quad.choice[index(StateKind::kPPrime)] = pprime.choice;
  const std::int32_t final_node = trace.add_node(
      last, root, node_of[root], child_vertices, child_nodes, ctx, final_quad);

  solution.root = root;
  solution.p_weight = p.weight;
  solution.pprime_weight = pprime.weight;
  solution.root_kind =
      p.weight <= pprime.weight ? StateKind::kP : StateKind::kPPrime;
  const ExtendedWeight best = final_quad[solution.root_kind];
  if (best.is_infeasible()) {
    throw Error(ErrorCode::kNoPairedDominatingSet,
                "graph has no paired-dominating set");
  }
  solution.set = trace.reconstruct(g, {root, final_node, solution.root_kind});
  solution.weight = best.value();
  return solution;
}

}  // namespace blockpd
