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
#include "gridcube/core.hpp"
#include "gridcube/errors.hpp"

namespace gridcube {
namespace {

using testing::h1;
using testing::k1;
using testing::q;

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(parse_rational("2/4"), q(1, 2));
  EXPECT_EQ(parse_rational("-6"), q(-6));
  EXPECT_EQ(parse_rational("3/-6"), q(-1, 2));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_THROW(parse_rational("1/0"), InvalidInputError);
  EXPECT_THROW(parse_rational("abc"), InvalidInputError);
  EXPECT_THROW(parse_rational(""), InvalidInputError);
}

TEST(Matrix, DeterminantMatchesHandComputation) {
  EXPECT_EQ(determinant(Matrix{{q(1), q(-2)}, {q(-2), q(1)}}), q(-3));
  EXPECT_EQ(determinant(Matrix{{q(0), q(1)}, {q(1), q(0)}}), q(-1));
  EXPECT_EQ(determinant(Matrix{{q(1, 2), q(1, 3)}, {q(1, 4), q(1, 5)}}), q(1, 10) - q(1, 12));
  EXPECT_EQ(determinant(Matrix{{q(2), q(0), q(1)}, {q(1), q(3), q(2)}, {q(1), q(1), q(2)}}), q(6));
  EXPECT_EQ(determinant(Matrix{{q(0), q(0), q(1)}, {q(0), q(2), q(0)}, {q(3), q(0), q(0)}}), q(-6));
  EXPECT_EQ(determinant(Matrix{{q(1), q(2)}, {q(2), q(4)}}), q(0));
}

TEST(Matrix, SolveAndInverse) {
  const Matrix a{{q(2), q(1)}, {q(1), q(3)}};
  const Vector b{q(3), q(5)};
  const auto x = solve(a, b);
  ASSERT_TRUE(x);
  EXPECT_EQ(a * *x, b);
  const auto inv = inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_EQ(a * *inv, Matrix::identity(2));
  EXPECT_FALSE(inverse(Matrix{{q(1), q(2)}, {q(2), q(4)}}));
}

TEST(Block, RepresentativeOfIdentityPatternIsIdentity) {
  const BlockType t({2, 1});
  EXPECT_EQ(representative_submatrix(BlockMatrix::identity_pattern(t), {0, 0}), Matrix::identity(2));
  const BlockType t3({3, 2, 2});
  const auto e = BlockMatrix::identity_pattern(t3);
  for (std::uint64_t r = 0; r < t3.vertex_count(); ++r)
    EXPECT_EQ(e.representative(selector_unrank(t3, r)), Matrix::identity(3));
}

TEST(Block, RepresentativeExtractsRows) {
  EXPECT_EQ(representative_submatrix(k1(), {0, 0}), (Matrix{{q(1), q(-1, 2)}, {q(-1, 2), q(1)}}));
  EXPECT_EQ(representative_submatrix(k1(), {1, 0}), (Matrix{{q(1), q(0)}, {q(-1, 2), q(1)}}));
  EXPECT_THROW(representative_submatrix(k1(), {2, 0}), InvalidInputError);
  EXPECT_THROW(representative_submatrix(k1(), {0}), InvalidInputError);
}

TEST(Block, SelectorKeysRoundTrip) {
  const BlockType t({3, 1, 2});
  for (std::uint64_t r = 0; r < t.vertex_count(); ++r) {
    const Selector s = selector_unrank(t, r);
    EXPECT_EQ(selector_rank(t, s), r);
    EXPECT_EQ(parse_selector_key(selector_key(s)), s);
  }
  EXPECT_EQ(selector_key({1, 0}), "1,2|2,1");
}

TEST(Core, PMatrix) {
  EXPECT_TRUE(is_p_matrix(BlockMatrix::identity_pattern(BlockType({3, 2}))));
  EXPECT_FALSE(is_p_matrix(BlockMatrix::square(Matrix{{q(0)}})));
  EXPECT_TRUE(is_p_matrix(k1()));
  EXPECT_TRUE(is_p_matrix(h1()));
  const auto v = find_nonpositive_minor(BlockMatrix::square(Matrix{{q(-1)}}));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->minor, q(-1));
  const auto w = find_nonpositive_minor(BlockMatrix::square(Matrix{{q(1), q(-2)}, {q(-2), q(1)}}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->minor, q(-3));
  EXPECT_EQ(w->picks, (std::vector<int>{0, 0}));
}

TEST(Core, SerialAndParallelMinorScansAgree) {
  const BlockMatrix bad(BlockType({2, 2}), Matrix{{q(1), q(0)}, {q(1), q(2)}, {q(3), q(1)}, {q(0), q(1)}});
  const auto a = find_nonpositive_minor(bad, Exec::kSerial);
  const auto b = find_nonpositive_minor(bad, Exec::kParallel);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->picks, b->picks);
  EXPECT_EQ(a->minor, b->minor);
}

TEST(Core, ZMatrix) {
  EXPECT_TRUE(is_z_matrix(k1()));
  EXPECT_FALSE(is_z_matrix(h1()));
  EXPECT_TRUE(is_z_matrix(BlockMatrix::identity_pattern(BlockType({2, 2}))));
}

TEST(Core, KMatrix) {
  EXPECT_TRUE(is_k_matrix(k1()));
  const auto x = k_certificate(k1());
  ASSERT_TRUE(x);
  EXPECT_TRUE(all_positive(*x));
  EXPECT_TRUE(all_positive(k1().entries() * *x));
  EXPECT_FALSE(is_k_matrix(BlockMatrix::square(Matrix{{q(1), q(-2)}, {q(-2), q(1)}})));
  EXPECT_TRUE(is_k_matrix(BlockMatrix::identity_pattern(BlockType({2, 1}))));
  EXPECT_FALSE(is_k_matrix(h1()));
}

TEST(Core, AsStochasticK) {
  const auto e = as_stochastic_k(BlockMatrix::identity_pattern(BlockType({2, 1})));
  ASSERT_TRUE(e);
  EXPECT_EQ(e.form->gamma, 0);
  EXPECT_EQ(e.form->p, uniform_stochastic(BlockType({2, 1})));

  const BlockMatrix m(BlockType({2, 1}), Matrix{{q(1), q(-1, 2)}, {q(1, 2), q(0)}, {q(-1, 2), q(1)}});
  const auto s = as_stochastic_k(m);
  ASSERT_TRUE(s);
  EXPECT_EQ(s.form->gamma, q(1, 2));
  EXPECT_EQ(s.form->p.entries(), (Matrix{{q(0), q(1)}, {q(1), q(0)}, {q(1), q(0)}}));
  EXPECT_EQ(s.form->matrix(), m);

  const auto k = as_stochastic_k(k1());
  EXPECT_FALSE(k);
  EXPECT_EQ(k.violating_row, 1u);
}

TEST(Core, StochasticFormOfK1) {
  const auto sf = stochastic_form(k1(), {q(1), q(1)});
  EXPECT_EQ(sf.form.gamma, q(1, 2));
  EXPECT_EQ(sf.scaling.left, (Vector{q(1), q(1, 2), q(1)}));
  EXPECT_EQ(scale(k1(), sf.scaling).entries(), (Matrix{{q(1), q(-1, 2)}, {q(1, 2), q(0)}, {q(-1, 2), q(1)}}));
  EXPECT_THROW(stochastic_form(k1(), {q(1), q(0)}), PreconditionError);
  EXPECT_THROW(stochastic_form(k1(), {q(1), q(3)}), PreconditionError);
}

TEST(Core, StochasticFormOfIdentity) {
  const BlockType t({2, 3});
  const auto sf = stochastic_form(BlockMatrix::identity_pattern(t), {q(1), q(1)});
  EXPECT_EQ(sf.form.gamma, 0);
  EXPECT_EQ(sf.scaling.left, constant_vector(5, 1));
}

TEST(Core, StochasticFormOfScaledVariant) {
  const DiagonalScaling sc{{q(3), q(1, 2), q(5)}, {q(2), q(7)}};
  const BlockMatrix m = scale(k1(), sc);
  const auto x = k_certificate(m);
  ASSERT_TRUE(x);
  const auto sf = stochastic_form(m, *x);
  EXPECT_GE(sf.form.gamma, 0);
  EXPECT_LT(sf.form.gamma, 1);
  EXPECT_EQ(scale(m, sf.scaling), sf.form.matrix());
}

TEST(Core, ScaleAndSignedConjugate) {
  const BlockType t({2, 1});
  const auto e = BlockMatrix::identity_pattern(t);
  EXPECT_EQ(scale(e, {constant_vector(3, 2), constant_vector(2, 1)}).entries(), q(2) * e.entries());
  EXPECT_THROW(scale(e, {constant_vector(3, 0), constant_vector(2, 1)}), PreconditionError);
  EXPECT_EQ(signed_conjugate(k1(), {1, 1}), k1());
  EXPECT_EQ(signed_conjugate(k1(), {1, -1}).entries(), (Matrix{{q(1), q(1, 2)}, {q(1), q(0)}, {q(1, 2), q(1)}}));
  EXPECT_THROW(signed_conjugate(k1(), {1, 0}), InvalidInputError);
}

}  // namespace
}  // namespace gridcube
