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

#ifndef GRIDCUBE_CORE_HPP
#define GRIDCUBE_CORE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gridcube/block.hpp"
#include "gridcube/parallel.hpp"

namespace gridcube {

/// M = E(b) - gamma * P with P >= 0 rowstochastic and 0 <= gamma < 1.
struct StochasticKForm {
  Rational gamma;
  BlockMatrix p;

  BlockMatrix matrix() const;
};

/// Uniform rowstochastic block matrix (every entry 1/n).
BlockMatrix uniform_stochastic(const BlockType& type);

Matrix representative_submatrix(const BlockMatrix& m, const Selector& sel);

/// A principal minor of some representative that is not strictly positive.
/// `picks[j]` is the chosen row of block j, or -1 when column j is not in
/// the principal subset.
struct MinorViolation {
  std::vector<int> picks;
  Rational minor;
};

/// Scans all prod(b_j + 1) - 1 partial selections. The reported violation
/// is the first one in mixed-radix order for both execution modes.
std::optional<MinorViolation> find_nonpositive_minor(const BlockMatrix& m,
                                                     Exec exec = Exec::kParallel);
bool is_p_matrix(const BlockMatrix& m, Exec exec = Exec::kParallel);
bool is_z_matrix(const BlockMatrix& m);

/// x > 0 with Mx > 0 when M is a Z-matrix admitting one; nullopt otherwise.
std::optional<Vector> k_certificate(const BlockMatrix& m);
bool is_k_matrix(const BlockMatrix& m);

struct StochasticKCheck {
  std::optional<StochasticKForm> form;
  std::size_t violating_row = 0;  // flat row index when form is empty
  std::string reason;

  explicit operator bool() const { return form.has_value(); }
};
StochasticKCheck as_stochastic_k(const BlockMatrix& m);

struct ScaledStochasticForm {
  DiagonalScaling scaling;
  StochasticKForm form;
};

/// L M H = E(b) - gamma P with H = diag(x). Requires M to be Z with
/// x > 0 and Mx > 0.
ScaledStochasticForm stochastic_form(const BlockMatrix& m, const Vector& x);

BlockMatrix scale(const BlockMatrix& m, const DiagonalScaling& sc);
BlockMatrix signed_conjugate(const BlockMatrix& m, const SignatureVector& s);
/// The block-diagonal signature applied to a right-hand side.
Vector signed_rhs(const BlockType& type, const Vector& q, const SignatureVector& s);

void check_signature(const SignatureVector& s, std::size_t n);

}  // namespace gridcube

#endif  // GRIDCUBE_CORE_HPP
