// Copyright 2026 The gridcube Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "gridcube/core.hpp"
#include "gridcube/errors.hpp"
#include "gridcube/glcp.hpp"
#include "gridcube/lpgrid.hpp"
#include "gridcube/mdp.hpp"
#include "gridcube/reduce.hpp"
#include "gridcube/uso.hpp"
#include "gridcube/witness.hpp"

namespace gridcube {
namespace {

using testing::h1;
using testing::h1_witness;
using testing::mdp1;
using testing::q;

GLCPInstance mdp1_glcp() {
  return GLCPInstance{BlockMatrix(BlockType({2}), Matrix{{q(1, 2)}, {q(1, 2)}}), {q(-1), q(-2)}};
}

GLCPSolution unique_solution(const GLCPInstance& inst) {
  const auto sols = distinct_solutions(brute_force_solve(inst));
  EXPECT_EQ(sols.size(), 1u);
  return sols.front();
}

// Solves the reduced instance, maps back and compares with the oracle.
void expect_round_trip(const GLCPInstance& original, const GLCPInstance& reduced, const ReductionTrace& trace) {
  const GLCPSolution back = recover(trace, unique_solution(reduced));
  EXPECT_TRUE(verify_solution(original, back));
  EXPECT_EQ(back, unique_solution(original));
}

GLCPInstance random_stochastic_k(testing::Generator& gen, const BlockType& type, const Rational& gamma) {
  return GLCPInstance{gen.stochastic_k(type, gamma).matrix(), gen.vector(type.rows(), 3)};
}

TEST(Reduce, StepNamesRoundTrip) {
  for (StepKind k : {StepKind::kHiddenKToK, StepKind::kKToHiddenK, StepKind::kPSplit, StepKind::kKSplit,
                     StepKind::kRescale})
    EXPECT_EQ(parse_step_kind(step_kind_name(k)), k);
  EXPECT_THROW(parse_step_kind("nope"), InvalidInputError);
}

TEST(Reduce, HiddenKToKOnFixture) {
  testing::Generator gen(41);
  for (int t = 0; t < 10; ++t) {
    const GLCPInstance inst{h1(), gen.vector(2, 3)};
    const Reduction red = hiddenk_to_k(inst, h1_witness(), {q(1), q(1)});
    EXPECT_EQ(red.inst.m.type(), BlockType({2, 2}));
    EXPECT_TRUE(is_k_matrix(red.inst.m));
    expect_round_trip(inst, red.inst, red.trace);
  }
}

TEST(Reduce, HiddenKToKStructureForKMatrix) {
  const GLCPInstance inst = mdp1_glcp();
  const Reduction red = hiddenk_to_k(inst, Matrix::identity(1));
  EXPECT_EQ(red.inst.m.type(), BlockType({3}));
  EXPECT_EQ(red.inst.m.entries(), (Matrix{{q(1, 2)}, {q(1, 2)}, {q(1)}}));
  EXPECT_EQ(red.inst.q, (Vector{q(-3, 2), q(-5, 2), q(-1)}));
  const GLCPSolution back = recover(red.trace, unique_solution(red.inst));
  EXPECT_EQ(back.z, (Vector{q(4)}));
}

TEST(Reduce, HiddenKToKRejectsBadInput) {
  const GLCPInstance inst{h1(), {q(1), q(1)}};
  EXPECT_THROW(hiddenk_to_k(inst, Matrix::identity(2)), PreconditionError);
  EXPECT_THROW(hiddenk_to_k(inst, h1_witness(), {q(1), q(0)}), PreconditionError);
}

TEST(Reduce, HiddenKToKContainsSubUso) {
  testing::Generator gen(42);
  int checked = 0;
  for (int t = 0; t < 60 && checked < 20; ++t) {
    auto [m, x] = gen.hidden_k(gen.block_type(2, 2), 3);
    const GLCPInstance inst = gen.glcp(m, 3);
    const Reduction red = hiddenk_to_k(inst, x, gen.positive_vector(m.n(), 2));
    if (!testing::nondegenerate(inst) || !testing::nondegenerate(red.inst)) continue;
    EXPECT_TRUE(subuso_matches(uso_from_glcp(red.inst), uso_from_glcp(inst)));
    expect_round_trip(inst, red.inst, red.trace);
    ++checked;
  }
  EXPECT_GE(checked, 10);
}

TEST(Reduce, KToHiddenKOnSingleState) {
  const GLCPInstance inst = mdp1_glcp();
  const HiddenKReduction red = k_to_hiddenk(inst, {1});
  EXPECT_EQ(red.inst.m.type(), BlockType({1}));
  EXPECT_TRUE(verify_proper(red.inst.m, red.witness));
  const GLCPSolution back = recover(red.trace, unique_solution(red.inst));
  EXPECT_EQ(back.z, (Vector{q(4)}));
  EXPECT_TRUE(verify_solution(inst, back));
}

TEST(Reduce, KToHiddenKRejectsPositiveRhs) {
  const GLCPInstance inst{mdp1_glcp().m, {q(1), q(2)}};
  EXPECT_THROW(k_to_hiddenk(inst, {1}), PreconditionError);
}

TEST(Reduce, HiddenKRoundTripThroughK) {
  testing::Generator gen(43);
  for (int t = 0; t < 20; ++t) {
    auto [m, x] = gen.hidden_k(gen.block_type(2, 2), 3);
    const GLCPInstance inst = gen.glcp(m, 3);
    const Reduction up = hiddenk_to_k(inst, x);
    Selector c(m.n());
    for (std::size_t j = 0; j < m.n(); ++j) c[j] = m.type().size(j);
    const HiddenKReduction down = k_to_hiddenk(up.inst, c);
    EXPECT_EQ(down.inst.m.type(), m.type());
    ReductionTrace trace = up.trace;
    trace.append(down.trace);
    expect_round_trip(inst, down.inst, trace);
  }
}

TEST(Reduce, PSplitOnSingleState) {
  const Reduction norm = normalize_diagonal(mdp1_glcp());
  const Reduction red = pglcp_split_step(norm.inst, 0);
  EXPECT_EQ(red.inst.m.type(), BlockType({1, 1, 1}));
  ReductionTrace trace = norm.trace;
  trace.append(red.trace);
  EXPECT_EQ(recover(trace, unique_solution(red.inst)).z, (Vector{q(4)}));
  EXPECT_THROW(pglcp_split_step(mdp1_glcp(), 0), PreconditionError);
  EXPECT_THROW(pglcp_split_step(red.inst, 0), PreconditionError);
}

TEST(Reduce, PSplitRecoveryCaseWithLargerFirstPart) {
  // The tight row stays in block 1, so recovery takes the v_j > v_n branch.
  const GLCPInstance inst{BlockMatrix(BlockType({2}), Matrix{{q(1, 2)}, {q(1, 2)}}), {q(-2), q(-1)}};
  const Reduction norm = normalize_diagonal(inst);
  const Reduction red = pglcp_split_step(norm.inst, 0);
  const GLCPSolution sol = unique_solution(red.inst);
  EXPECT_GT(sol.z[0], sol.z[1]);
  ReductionTrace trace = norm.trace;
  trace.append(red.trace);
  const GLCPSolution back = recover(trace, sol);
  EXPECT_EQ(back, unique_solution(inst));
}

TEST(Reduce, PSplitPreservesP) {
  testing::Generator gen(44);
  for (int t = 0; t < 40; ++t) {
    const GLCPInstance inst = gen.glcp(gen.p_matrix(gen.block_type(2, 3), 3), 3);
    Reduction cur = normalize_diagonal(inst);
    for (std::size_t j = 0; j < inst.m.n(); ++j) {
      while (cur.inst.m.type().size(j) > 1) {
        const std::size_t n = cur.inst.m.n();
        const std::size_t rows = cur.inst.m.m();
        Reduction step = pglcp_split_step(cur.inst, j);
        EXPECT_EQ(step.inst.m.n(), n + 2);
        EXPECT_EQ(step.inst.m.m(), rows + 1);
        EXPECT_TRUE(is_p_matrix(step.inst.m));
        cur.inst = step.inst;
        cur.trace.append(step.trace);
      }
    }
    expect_round_trip(inst, cur.inst, cur.trace);
  }
}

TEST(Reduce, PlcpDimension) {
  testing::Generator gen(45);
  const GLCPInstance inst = gen.glcp(gen.p_matrix(BlockType({2, 2}), 3), 3);
  const Reduction red = pglcp_to_plcp(inst);
  EXPECT_TRUE(red.inst.m.type().is_all_ones());
  EXPECT_EQ(red.inst.m.n(), 6u);
  expect_round_trip(inst, red.inst, red.trace);

  const Reduction single = pglcp_to_plcp(mdp1_glcp());
  EXPECT_EQ(single.inst.m.n(), 3u);
  EXPECT_EQ(recover(single.trace, unique_solution(single.inst)).z, (Vector{q(4)}));

  const GLCPInstance lcp{h1(), {q(-1), q(2)}};
  const Reduction same = pglcp_to_plcp(lcp);
  EXPECT_TRUE(same.trace.steps.empty());
  EXPECT_EQ(same.inst.m, lcp.m);
}

TEST(Reduce, PlcpRandomRoundTrips) {
  testing::Generator gen(46);
  for (int t = 0; t < 40; ++t) {
    const GLCPInstance inst = gen.glcp(gen.p_matrix(gen.block_type(2, 3), 3), 3);
    const Reduction red = pglcp_to_plcp(inst);
    EXPECT_EQ(red.inst.m.n(), 2 * inst.m.m() - inst.m.n());
    expect_round_trip(inst, red.inst, red.trace);
  }
}

TEST(Reduce, KSplitFactor) {
  testing::Generator gen(47);
  const GLCPInstance inst = random_stochastic_k(gen, BlockType({3}), q(1, 2));
  const Reduction red = kglcp_split_step(inst, 0, 2);
  EXPECT_EQ(red.inst.m.type(), BlockType({2, 2}));
  const StochasticKCheck check = as_stochastic_k(red.inst.m);
  ASSERT_TRUE(check);
  EXPECT_EQ(check.form->gamma, q(3, 4));
  EXPECT_EQ(red.inst.q[red.inst.m.type().flat(1, 1)], 0);
  expect_round_trip(inst, red.inst, red.trace);
}

TEST(Reduce, KSplitRejectsNonStochastic) {
  const GLCPInstance inst{BlockMatrix(BlockType({2}), Matrix{{q(2)}, {q(1, 2)}}), {q(-1), q(-1)}};
  EXPECT_THROW(kglcp_split_step(inst, 0, 1), PreconditionError);
}

TEST(Reduce, KSplitEveryStepIsStochastic) {
  testing::Generator gen(48);
  for (int t = 0; t < 40; ++t) {
    const Rational gamma = gen.discount();
    const GLCPInstance inst = random_stochastic_k(gen, gen.block_type(2, 3), gamma);
    Reduction cur{inst, {}};
    Rational factor = gamma;
    for (std::size_t j = 0; j < inst.m.n(); ++j) {
      while (cur.inst.m.type().size(j) > 2) {
        const std::size_t rows = cur.inst.m.m();
        Reduction step = kglcp_split_step(cur.inst, j, kglcp_split_row(cur.inst, j, false));
        const StochasticKCheck check = as_stochastic_k(step.inst.m);
        ASSERT_TRUE(check);
        EXPECT_EQ(check.form->gamma, (1 + factor) / 2);
        EXPECT_EQ(step.inst.m.m(), rows + 1);
        factor = check.form->gamma;
        cur.inst = step.inst;
        cur.trace.append(step.trace);
      }
    }
    expect_round_trip(inst, cur.inst, cur.trace);
  }
}

TEST(Reduce, BinaryShapes) {
  testing::Generator gen(49);
  const GLCPInstance inst = random_stochastic_k(gen, BlockType({4}), q(1, 2));
  const Reduction red = kglcp_to_binary(inst, false);
  EXPECT_EQ(red.inst.m.type(), BlockType({2, 2, 2}));
  expect_round_trip(inst, red.inst, red.trace);

  const GLCPInstance binary = random_stochastic_k(gen, BlockType({2, 1}), q(1, 2));
  EXPECT_TRUE(kglcp_to_binary(binary).trace.steps.empty());
}

TEST(Reduce, RhsOrderKeepsNonpositiveRepresentative) {
  testing::Generator gen(50);
  int kept = 0;
  for (int t = 0; t < 40; ++t) {
    GLCPInstance inst = random_stochastic_k(gen, gen.block_type(3, 4), gen.discount());
    // One nonpositive entry per block, the rest positive.
    const BlockType& b = inst.m.type();
    for (std::size_t j = 0; j < b.blocks(); ++j) {
      const int neg = gen.uniform_int(0, b.size(j) - 1);
      for (int i = 0; i < b.size(j); ++i)
        inst.q[b.flat(j, i)] = i == neg ? -gen.positive_rational(3) : gen.positive_rational(3);
    }
    const Reduction ordered = kglcp_to_binary(inst, true);
    EXPECT_TRUE(nonpositive_representative(ordered.inst).has_value());
    if (nonpositive_representative(kglcp_to_binary(inst, false).inst)) ++kept;
  }
  // Without the ordering some instances lose the property.
  EXPECT_LT(kept, 40);
}

TEST(Reduce, HiddenKLcpPipeline) {
  testing::Generator gen(51);
  for (int t = 0; t < 8; ++t) {
    const GLCPInstance inst{h1(), gen.vector(2, 3)};
    const HiddenKReduction red = hiddenk_glcp_to_hiddenk_lcp(inst, h1_witness());
    EXPECT_TRUE(red.inst.m.type().is_all_ones());
    EXPECT_TRUE(verify_proper(red.inst.m, red.witness));
    expect_round_trip(inst, red.inst, red.trace);
  }
  const HiddenKReduction single = hiddenk_glcp_to_hiddenk_lcp(mdp1_glcp(), Matrix::identity(1));
  EXPECT_EQ(recover(single.trace, unique_solution(single.inst)).z, (Vector{q(4)}));
}

TEST(Reduce, HiddenKLcpPipelineRandom) {
  testing::Generator gen(52);
  for (int t = 0; t < 15; ++t) {
    auto [m, x] = gen.hidden_k(gen.block_type(2, 2), 3);
    const GLCPInstance inst = gen.glcp(m, 3);
    const HiddenKReduction red = hiddenk_glcp_to_hiddenk_lcp(inst, x);
    EXPECT_TRUE(red.inst.m.type().is_all_ones());
    EXPECT_TRUE(is_p_matrix(red.inst.m));
    expect_round_trip(inst, red.inst, red.trace);
  }
}

TEST(Reduce, CubeLpFromSingleState) {
  const GridLP lp = mdp_to_grid_lp(mdp1(), {q(1)});
  const CubeLpReduction red = grid_lp_to_cube_lp(lp, Matrix::identity(1));
  EXPECT_TRUE(red.cube.m.type().is_all_ones());
  EXPECT_TRUE(is_grid_lp(red.cube.m, red.cube.p));
  const GLCPInstance final_inst{red.cube.m, red.cube.q};
  const Basis cube_basis = brute_force_solve(final_inst).front().basis;
  EXPECT_EQ(recover_grid_lp_basis(lp, red, cube_basis), (Basis{1}));
}

TEST(Reduce, CubeLpRandomRoundTrips) {
  testing::Generator gen(53);
  int checked = 0;
  for (int t = 0; t < 20; ++t) {
    auto [m, x] = gen.hidden_k(gen.block_type(2, 2), 3);
    const GLCPInstance inst = gen.glcp(m, 3);
    if (!testing::nondegenerate(inst)) continue;
    const GridLP lp = dual_lp_from_glcp(inst, x, gen.positive_vector(m.n(), 3));
    const CubeLpReduction red = grid_lp_to_cube_lp(lp, t % 2 == 0 ? std::optional<Matrix>(x) : std::nullopt);
    EXPECT_TRUE(red.cube.m.type().is_all_ones());
    const GLCPInstance final_inst{red.cube.m, red.cube.q};
    const Basis cube_basis = brute_force_solve(final_inst).front().basis;
    EXPECT_EQ(recover_grid_lp_basis(lp, red, cube_basis), grid_simplex(lp).basis);
    ++checked;
  }
  EXPECT_GT(checked, 5);
}

TEST(Reduce, BinaryMdpIdentity) {
  const BinaryMdpReduction red = mdp_to_binary_mdp(mdp1());
  EXPECT_TRUE(red.trace.steps.empty());
  EXPECT_EQ(red.mdp.p, mdp1().p);
  EXPECT_EQ(recover_mdp_values(mdp1(), red, {q(4)}), (Vector{q(4)}));
}

TEST(Reduce, BinaryMdpThreeActions) {
  const DiscountedMDP m{BlockMatrix(BlockType({3}), Matrix{{q(1)}, {q(1)}, {q(1)}}), {q(1), q(3), q(2)}, q(1, 2)};
  const BinaryMdpReduction red = mdp_to_binary_mdp(m);
  EXPECT_EQ(red.mdp.states(), 2u);
  EXPECT_EQ(red.mdp.gamma, q(3, 4));
  EXPECT_EQ(recover_mdp_values(m, red, solve_optimal(red.mdp).value), (Vector{q(6)}));
}

TEST(Reduce, BinaryMdpRandom) {
  testing::Generator gen(54);
  for (int t = 0; t < 30; ++t) {
    const DiscountedMDP m = gen.mdp(3, 4, gen.discount());
    const BinaryMdpReduction red = mdp_to_binary_mdp(m);
    for (std::size_t j = 0; j < red.mdp.states(); ++j) EXPECT_LE(red.mdp.actions().size(j), 2);
    EXPECT_EQ(red.mdp.actions().rows(), m.actions().rows() + red.mdp.states() - m.states());
    EXPECT_EQ(recover_mdp_values(m, red, solve_optimal(red.mdp).value), solve_optimal(m).value);
  }
}

}  // namespace
}  // namespace gridcube
