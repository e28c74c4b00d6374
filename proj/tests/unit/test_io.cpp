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
#include "gridcube/errors.hpp"
#include "gridcube/io.hpp"
#include "gridcube/reduce.hpp"

namespace gridcube {
namespace {

using testing::k1;
using testing::mdp1;
using testing::q;

TEST(Io, RationalsInLowestTerms) {
  EXPECT_EQ(io::rational_to_json(q(2, 4)), "1/2");
  EXPECT_EQ(io::rational_to_json(q(-3)), "-3");
  EXPECT_EQ(io::rational_from_json(io::Json("6/-4")), q(-3, 2));
  EXPECT_EQ(io::rational_from_json(io::Json(7)), q(7));
  EXPECT_THROW(io::rational_from_json(io::Json(0.5)), InvalidInputError);
  EXPECT_THROW(io::rational_from_json(io::Json("1/0")), InvalidInputError);
}

TEST(Io, BlockMatrixLayout) {
  const io::Json j = io::parse(R"({"blocks": [[["1","-1/2"],["1","0"]], [["-1/2","1"]]]})");
  EXPECT_EQ(io::block_matrix_from_json(j), k1());
  EXPECT_EQ(io::block_matrix_to_json(k1()), j);
  EXPECT_THROW(io::block_matrix_from_json(io::parse(R"({"blocks": [[["1"]], [["2"]]]})")), InvalidInputError);
}

TEST(Io, MdpLayout) {
  const io::Json j = io::parse(
      R"({"kind":"mdp","gamma":"1/2","states":[{"actions":[{"reward":"1","probs":["1"]},{"reward":"2","probs":["1"]}]}]})");
  const DiscountedMDP m = io::mdp_from_json(j);
  EXPECT_EQ(m.p, mdp1().p);
  EXPECT_EQ(m.r, mdp1().r);
  EXPECT_EQ(m.gamma, mdp1().gamma);
  EXPECT_EQ(io::mdp_to_json(m), j);
}

TEST(Io, RoundTrips) {
  testing::Generator gen(61);
  for (int t = 0; t < 10; ++t) {
    const GLCPInstance inst = gen.glcp(gen.block_matrix(gen.block_type(3, 3), 3), 3);
    const io::Json j = io::glcp_to_json(inst);
    EXPECT_EQ(io::kind_of(j), "glcp");
    const GLCPInstance back = io::glcp_from_json(io::parse(j.dump()));
    EXPECT_EQ(back.m, inst.m);
    EXPECT_EQ(back.q, inst.q);

    const StochasticGame g = gen.game(3, 3, gen.discount());
    const StochasticGame gb = io::game_from_json(io::parse(io::game_to_json(g).dump()));
    EXPECT_EQ(gb.mdp.p, g.mdp.p);
    EXPECT_EQ(gb.mdp.r, g.mdp.r);
    EXPECT_EQ(gb.owner, g.owner);

    const GridLP lp{inst.m, gen.positive_vector(inst.m.n(), 3), inst.q};
    const GridLP lb = io::grid_lp_from_json(io::grid_lp_to_json(lp));
    EXPECT_EQ(lb.m, lp.m);
    EXPECT_EQ(lb.p, lp.p);
    EXPECT_EQ(lb.q, lp.q);

    const GLCPSolution sol{gen.vector(4, 3), gen.vector(2, 3)};
    EXPECT_EQ(io::solution_from_json(io::solution_to_json(sol)), sol);
  }
}

TEST(Io, UsoRoundTrip) {
  testing::Generator gen(62);
  int done = 0;
  while (done < 5) {
    const GLCPInstance inst = gen.glcp(gen.p_matrix(gen.block_type(2, 2), 3), 3);
    if (!testing::nondegenerate(inst)) continue;
    const GridUSO o = uso_from_glcp(inst);
    const io::Json j = io::uso_to_json(o);
    EXPECT_EQ(io::uso_from_json(io::parse(j.dump())), o);
    ++done;
  }
  const io::Json bad = io::parse(R"({"kind":"uso","b":[1],"out":{"1,1":[[1,2]]}})");
  EXPECT_THROW(io::uso_from_json(bad), InvalidInputError);
}

TEST(Io, TraceRoundTrip) {
  testing::Generator gen(63);
  auto [m, x] = gen.hidden_k(BlockType({2, 1}), 3);
  const HiddenKReduction red = hiddenk_glcp_to_hiddenk_lcp(gen.glcp(m, 3), x);
  const Reduction p = pglcp_to_plcp(gen.glcp(gen.p_matrix(BlockType({3}), 3), 3));
  for (const ReductionTrace* t : {&red.trace, &p.trace}) {
    EXPECT_FALSE(t->steps.empty());
    EXPECT_EQ(io::trace_from_json(io::parse(io::trace_to_json(*t).dump())), *t);
  }
}

TEST(Io, SplitRecordRoundTrip) {
  const DiscountedMDP m{BlockMatrix(BlockType({3}), Matrix{{q(1)}, {q(1)}, {q(1)}}), {q(1), q(3), q(2)}, q(1, 2)};
  const auto records = game_to_binary(game_from_mdp(m, Owner::kMin)).second;
  const auto back = io::split_records_from_json(io::split_records_to_json(records));
  ASSERT_EQ(back.size(), records.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].state, records[i].state);
    EXPECT_EQ(back[i].new_state, records[i].new_state);
    EXPECT_EQ(back[i].owner, records[i].owner);
    EXPECT_EQ(back[i].delta, records[i].delta);
  }
}

TEST(Io, KindChecks) {
  EXPECT_THROW(io::kind_of(io::parse("{}")), InvalidInputError);
  EXPECT_THROW(io::expect_kind(io::glcp_to_json(GLCPInstance{k1(), {q(1), q(1), q(1)}}), "mdp"), InvalidInputError);
  EXPECT_THROW(io::parse("{"), InvalidInputError);
}

}  // namespace
}  // namespace gridcube
