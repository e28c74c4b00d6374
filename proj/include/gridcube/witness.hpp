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

#ifndef GRIDCUBE_WITNESS_HPP
#define GRIDCUBE_WITNESS_HPP

#include <optional>

#include "gridcube/block.hpp"
#include "gridcube/core.hpp"

namespace gridcube {

/// (X, Y, r, s) with X square Z, Y block Z, MX = Y, r, s >= 0 and
/// X^T r + Y^T s > 0.
struct HiddenZWitness {
  Matrix x;
  BlockMatrix y;
  Vector r;
  Vector s;
};

bool is_square_z(const Matrix& x);
bool verify_hidden_z(const BlockMatrix& m, const HiddenZWitness& w);

/// X and MX are Z and every row sum of [MX|X] is positive.
bool verify_proper(const BlockMatrix& m, const Matrix& x);

/// (XD, YD, r, s) with D = diag(d).
HiddenZWitness rescale_witness(const HiddenZWitness& w, const Vector& d);

struct MinFactorWitness {
  Rational gamma;
  Matrix x;
};

/// min gamma s.t. [MX|X] <= E(b+1) entrywise, [MX|X] 1 >= (1 - gamma) 1.
/// nullopt when the optimum is gamma >= 1, i.e. M is not hidden K.
std::optional<MinFactorWitness> compute_min_factor_witness(const BlockMatrix& m);

struct WitnessStochasticForm {
  /// left scales the m rows of MX, right is H (so H^{-1} scales X).
  DiagonalScaling scaling;
  /// [LY|H^{-1}X] = E(b+1) - gamma P.
  StochasticKForm form;
};

/// Requires verify_proper(m, x).
WitnessStochasticForm witness_stochastic_form(const BlockMatrix& m, const Matrix& x);

/// A proper witness X, or nullopt when M is not hidden K.
std::optional<Matrix> is_hidden_k(const BlockMatrix& m);

}  // namespace gridcube

#endif  // GRIDCUBE_WITNESS_HPP
