#include <gtest/gtest.h>

#include <vector>

#include "blockpd/dp.hpp"
#include "blockpd/error.hpp"
#include "blockpd/generator.hpp"
#include "blockpd/oracle.hpp"
#include "graphs.hpp"

namespace blockpd {
namespace {

constexpr auto D = StateKind::kD;
constexpr auto P = StateKind::kP;
constexpr auto PP = StateKind::kPPrime;
constexpr auto PB = StateKind::kPBar;
const ExtendedWeight inf = kInfeasible;

ExtendedWeight ew(Weight w) { return ExtendedWeight(w); }

StateQuad quad(ExtendedWeight d, ExtendedWeight p, ExtendedWeight pp,
               ExtendedWeight pb) {
  StateQuad q;
  q.weight = {d, p, pp, pb};
  return q;
}

// Merges one block: root `root` with the given child quads.
StateQuad merge(const StateQuad& root, std::vector<StateQuad> children) {
  return merge_block(root, build_merge_context(children));
}

StateQuad fresh(VertexId v, Weight w = 1) { return StateQuad::initial(v, w); }

// Quad at vertex 1 of the path 1-2-3 (ids 1, 2, 3) with weights w1, w2, w3,
// rooted at 1.
StateQuad path_child(Weight w1, Weight w2, Weight w3) {
  const StateQuad at2 = merge(fresh(2, w2), {fresh(3, w3)});
  return merge(fresh(1, w1), {at2});
}

TEST(InitStates, InitialQuad) {
  const auto g = testing::make_graph(2, {7, 0}, {{0, 1}});
  const auto quads = init_states(g);
  ASSERT_EQ(quads.size(), 2u);
  EXPECT_EQ(quads[0][D], ew(7));
  EXPECT_EQ(quads[0][P], inf);
  EXPECT_EQ(quads[0][PP], inf);
  EXPECT_EQ(quads[0][PB], ew(0));
  EXPECT_EQ(quads[1][D], ew(0));
  EXPECT_EQ(quads[1][PB], ew(0));
}

TEST(MergeContext, OneFreshChild) {
  const std::vector<StateQuad> children = {fresh(1)};
  const auto ctx = build_merge_context(children);
  EXPECT_EQ(ctx.best_kind[0], PB);
  EXPECT_EQ(ctx.best_weight(0), ew(0));
  EXPECT_EQ(ctx.d_count, 0u);
  EXPECT_EQ(ctx.alpha, 0u);
  EXPECT_EQ(ctx.alpha_prime, std::nullopt);
  EXPECT_EQ(ctx.beta, std::nullopt);
  EXPECT_EQ(ctx.gamma, 0u);
  EXPECT_EQ(ctx.pbar_children, std::vector<std::uint32_t>{0});
}

TEST(MergeContext, TwoDChildren) {
  const std::vector<StateQuad> children = {quad(ew(1), ew(5), inf, inf),
                                           quad(ew(2), ew(3), inf, inf)};
  const auto ctx = build_merge_context(children);
  EXPECT_EQ(ctx.d_count, 2u);
  EXPECT_EQ(ctx.alpha, std::nullopt);
  EXPECT_EQ(ctx.beta, 1u);
  EXPECT_EQ(ctx.beta_replacement, P);
  EXPECT_TRUE(ctx.pbar_children.empty());
  EXPECT_EQ(ctx.base_weight, ew(3));
}

TEST(MergeContext, TiesFollowKindOrder) {
  const std::vector<StateQuad> children = {
      quad(ew(3), ew(3), ew(3), ew(3)), quad(inf, ew(2), ew(2), inf),
      quad(inf, inf, ew(2), ew(2)), quad(ew(4), inf, inf, ew(4))};
  const auto ctx = build_merge_context(children);
  EXPECT_EQ(ctx.best_kind, (std::vector<StateKind>{D, P, PP, D}));
  // Both D children can leave D at zero cost; the earlier index wins.
  EXPECT_EQ(ctx.beta, 0u);
  EXPECT_EQ(ctx.beta_replacement, P);
}

TEST(MergeContext, AlphaGammaRunnersUp) {
  const std::vector<StateQuad> children = {
      quad(ew(9), ew(4), ew(2), inf), quad(ew(3), ew(6), ew(1), inf),
      quad(ew(5), ew(1), inf, inf)};
  const auto ctx = build_merge_context(children);
  // D deltas: child0 7, child1 2, child2 4.
  EXPECT_EQ(ctx.alpha, 1u);
  EXPECT_EQ(ctx.alpha_prime, 2u);
  EXPECT_TRUE(ctx.has_p_child);
  // P deltas: child0 2, child1 5.
  EXPECT_EQ(ctx.gamma, 0u);
  EXPECT_EQ(ctx.gamma_prime, 1u);
}

TEST(MergeContext, GammaExcludingBeta) {
  const std::vector<StateQuad> children = {quad(ew(1), ew(2), inf, inf),
                                           quad(inf, ew(9), ew(1), inf)};
  const auto ctx = build_merge_context(children);
  EXPECT_EQ(ctx.beta, 0u);
  EXPECT_EQ(ctx.gamma, 0u);
  EXPECT_EQ(ctx.gamma_excluding_beta(), 1u);
}

TEST(MergeD, K2FreshChild) {
  const auto r = merge_D(fresh(0, 5), build_merge_context(
                                          std::vector<StateQuad>{fresh(1, 3)}));
  EXPECT_EQ(r.weight, ew(5));
  EXPECT_EQ(r.choice.candidate, Candidate::kX);
  EXPECT_EQ(r.choice.g1_kind, D);
  EXPECT_EQ(r.choice.child_kind(0, PB), PB);
}

TEST(MergeD, K3Unit) {
  const auto q = merge(fresh(0), {fresh(1), fresh(2)});
  EXPECT_EQ(q[D], ew(1));
}

TEST(MergeD, EvenDChildrenStayInD) {
  const std::vector<StateQuad> children = {quad(ew(1), ew(5), inf, inf),
                                           quad(ew(2), ew(3), inf, inf)};
  const auto r = merge_D(fresh(0, 4), build_merge_context(children));
  EXPECT_EQ(r.weight, ew(7));
  EXPECT_EQ(r.choice.candidate, Candidate::kX);
  EXPECT_EQ(r.choice.override_count, 0u);
}

TEST(MergeP, K2FreshChild) {
  const auto r = merge_P(fresh(0, 5), build_merge_context(
                                          std::vector<StateQuad>{fresh(1, 3)}));
  EXPECT_EQ(r.weight, ew(8));
  EXPECT_EQ(r.choice.candidate, Candidate::kXPlus);
}

TEST(MergeP, PathOfThreeAtEndpoint) {
  const auto q = path_child(1, 1, 1);
  EXPECT_EQ(q[P], ew(2));
}

TEST(MergeP, OddDChildPairsAcrossBlock) {
  // Block {0, 1}; below 1 hangs the triangle {1, 2, 3}, whose best state
  // at 1 is D.
  const StateQuad at1 = merge(fresh(1), {fresh(2), fresh(3)});
  const std::vector<StateQuad> children = {at1};
  const auto ctx = build_merge_context(children);
  EXPECT_EQ(ctx.d_count, 1u);
  const auto r = merge_P(fresh(0), ctx);
  EXPECT_EQ(r.weight, ew(2));
  EXPECT_EQ(r.choice.candidate, Candidate::kX);
}

TEST(MergeQ1, K2FreshChild) {
  const auto ctx = build_merge_context(std::vector<StateQuad>{fresh(1)});
  EXPECT_EQ(merge_Q1(fresh(0), ctx).weight, inf);
  EXPECT_EQ(merge_Q1(fresh(0), ctx).choice.candidate, Candidate::kInfeasible);
}

TEST(MergeQ2, K2FreshChild) {
  const auto ctx = build_merge_context(std::vector<StateQuad>{fresh(1)});
  EXPECT_EQ(ctx.q2_case(), Q2Case::kC13);
  EXPECT_EQ(merge_Q2(fresh(0), ctx).weight, inf);
}

TEST(MergeQ2, PathOfThreeAtEndpoint) {
  const StateQuad at1 = merge(fresh(1), {fresh(2)});
  const auto ctx = build_merge_context(std::vector<StateQuad>{at1});
  EXPECT_EQ(ctx.q2_case(), Q2Case::kC11);
  const auto r = merge_Q2(fresh(0), ctx);
  EXPECT_EQ(r.weight, ew(2));
  EXPECT_EQ(r.choice.candidate, Candidate::kT11);
  EXPECT_EQ(merge_Pprime(fresh(0), ctx).weight, ew(2));
}

// A single child whose best state is P' and r = 0 selects C13, not C14; the
// base Z2 would leave the root undominated.
TEST(MergeQ2, PPrimeChildWithNoDChildren) {
  const StateQuad at1 = path_child(10, 1, 1);
  EXPECT_EQ(at1[D], ew(12));
  EXPECT_EQ(at1[P], ew(11));
  EXPECT_EQ(at1[PP], ew(2));
  EXPECT_EQ(at1[PB], inf);

  const auto ctx = build_merge_context(std::vector<StateQuad>{at1});
  EXPECT_EQ(ctx.best_kind[0], PP);
  EXPECT_EQ(ctx.q2_case(), Q2Case::kC13);
  const auto r = merge_Q2(fresh(0), ctx);
  EXPECT_EQ(r.weight, ew(11));
  EXPECT_EQ(r.choice.candidate, Candidate::kT9);
  EXPECT_EQ(merge_Pprime(fresh(0), ctx).weight, ew(11));

  const auto g = testing::path(4, {1, 10, 1, 1});
  EXPECT_EQ(oracle::state(g, 0, PP), ew(11));
}

TEST(MergePprime, K2FreshChild) {
  const auto ctx = build_merge_context(std::vector<StateQuad>{fresh(1)});
  EXPECT_EQ(merge_Pprime(fresh(0), ctx).weight, inf);
}

TEST(MergePbar, K2FreshChild) {
  const auto ctx = build_merge_context(std::vector<StateQuad>{fresh(1)});
  EXPECT_EQ(merge_Pbar(fresh(0), ctx).weight, inf);
  EXPECT_EQ(fresh(0)[PB], ew(0));
}

TEST(MergePbar, Caterpillar) {
  // Triangle {0, 1, 2} with paths 1-3-4 and 2-5-6 hanging off it.
  const StateQuad at1 = path_child(1, 1, 1);
  const StateQuad at2 = path_child(1, 1, 1);
  const auto r = merge_Pbar(
      fresh(0), build_merge_context(std::vector<StateQuad>{at1, at2}));
  EXPECT_EQ(r.weight, ew(4));
  EXPECT_TRUE(r.choice.all_children_to_pprime);

  const auto g = testing::from_blocks(
      7, {{0, 1, 2}, {1, 3}, {3, 4}, {2, 5}, {5, 6}});
  EXPECT_EQ(oracle::state(g, 0, PB), ew(4));
}

TEST(Cases, ExactlyOneCaseForEveryConditionTuple) {
  for (int has_p = 0; has_p < 2; ++has_p) {
    for (std::size_t r = 0; r < 4; ++r) {
      for (int has_pbar = 0; has_pbar < 2; ++has_pbar) {
        MergeContext ctx;
        ctx.has_p_child = has_p;
        ctx.d_count = r;
        if (has_pbar) ctx.pbar_children.push_back(0);
        EXPECT_NO_THROW(ctx.q1_case());
        EXPECT_NO_THROW(ctx.q2_case());
      }
    }
  }
}

TEST(Cases, Q1Table) {
  auto q1 = [](bool has_p, std::size_t r, bool has_pbar) {
    MergeContext ctx;
    ctx.has_p_child = has_p;
    ctx.d_count = r;
    if (has_pbar) ctx.pbar_children.push_back(0);
    return ctx.q1_case();
  };
  EXPECT_EQ(q1(true, 1, false), Q1Case::kC1);
  EXPECT_EQ(q1(true, 2, true), Q1Case::kC2);
  EXPECT_EQ(q1(false, 1, true), Q1Case::kC3);
  EXPECT_EQ(q1(false, 1, false), Q1Case::kC4);
  EXPECT_EQ(q1(false, 3, true), Q1Case::kC5);
  EXPECT_EQ(q1(false, 0, true), Q1Case::kC6);
  EXPECT_EQ(q1(false, 0, false), Q1Case::kC7);
  EXPECT_EQ(q1(false, 2, true), Q1Case::kC8);
}

TEST(Cases, Q2Table) {
  auto q2 = [](bool has_p, std::size_t r) {
    MergeContext ctx;
    ctx.has_p_child = has_p;
    ctx.d_count = r;
    return ctx.q2_case();
  };
  EXPECT_EQ(q2(true, 3), Q2Case::kC9);
  EXPECT_EQ(q2(true, 0), Q2Case::kC10);
  EXPECT_EQ(q2(false, 1), Q2Case::kC11);
  EXPECT_EQ(q2(false, 3), Q2Case::kC12);
  EXPECT_EQ(q2(false, 0), Q2Case::kC13);
  EXPECT_EQ(q2(false, 2), Q2Case::kC14);
}

// In every finite D result the children left in D pair up among themselves.
TEST(Parity, DChildrenEvenInD) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = random_block_graph(1 + seed % 9, 2 + seed % 4, 20, seed);
    SolveOptions opts;
    opts.on_merge = [&](const MergeEvent& ev) {
      if (ev.result[D].is_infeasible()) return;
      const ChoiceRecord& c = ev.result.choice[index(D)];
      std::size_t in_d = 0;
      for (std::uint32_t i = 0; i < ev.context.child_count(); ++i) {
        if (c.child_kind(i, ev.context.best_kind[i]) == D) ++in_d;
      }
      EXPECT_EQ(in_d % 2, 0u) << "seed " << seed;
      ++checked;
    };
    if (g.vertex_count() >= 2) solve(g, opts);
  }
  EXPECT_GT(checked, 100u);
}

TEST(Trace, InitialStates) {
  const auto g = testing::make_graph(2, {5, 3}, {{0, 1}});
  DpTrace trace;
  EXPECT_EQ(trace.reconstruct(g, StateRef{0, StateRef::kInitialNode, D}),
            VertexSet::of(g, {0}));
  EXPECT_TRUE(trace.reconstruct(g, StateRef{1, StateRef::kInitialNode, PB})
                  .empty());
  EXPECT_THROW(trace.reconstruct(g, StateRef{1, StateRef::kInitialNode, P}),
               Error);
}

}  // namespace
}  // namespace blockpd
