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

#ifndef GRIDCUBE_LPGRID_HPP
#define GRIDCUBE_LPGRID_HPP

#include <cstddef>
#include <vector>

#include "gridcube/block.hpp"
#include "gridcube/glcp.hpp"
#include "gridcube/parallel.hpp"

namespace gridcube {

/// min q^T u  s.t.  M^T u <= p,  u >= 0.  In equality form the constraint
/// matrix is A = [M^T | I] with costs c = [q | 0]; column (j, i), i < b_j,
/// is u^j_i and column (j, b_j) is the slack of row j.
struct GridLP {
  BlockMatrix m;
  Vector p;
  Vector q;

  void validate() const;
};

/// A basis is a selector on G(b+1): pick k of block j is the basic column
/// (j, k). This is the same vertex labelling as the dual GLCP, where the
/// pick is the nonbasic index.
Basis slack_basis(const BlockType& type);

/// Every basis nonsingular with A_B^{-1} p > 0.
bool is_grid_lp(const BlockMatrix& m, const Vector& p, Exec exec = Exec::kParallel);

/// c_N - c_B A_B^{-1} A_N, flat over the extended type; the entry for the
/// basic column of each block is 0. Throws NotPMatrixError when A_B is
/// singular.
Vector reduced_costs(const GridLP& lp, const Basis& b);

/// Compares reduced_costs with [I|-M]_N^{-1} q at the same vertex.
bool reduced_cost_identity_check(const GridLP& lp, const Basis& b);

/// GridLP(M, X^{-T} v, q). Requires verify_proper(M, X) and v > 0.
GridLP dual_lp_from_glcp(const GLCPInstance& inst, const Matrix& x, const Vector& v);

/// GLCP(M, q). Requires is_grid_lp(M, p).
GLCPInstance glcp_from_grid_lp(const GridLP& lp);

struct GridSimplexResult {
  Basis basis;
  Vector u;
  Rational value;
  std::size_t pivots = 0;
};

/// Follows negative reduced costs from the slack basis. Raises
/// DegenerateError on a zero reduced cost.
GridSimplexResult grid_simplex(const GridLP& lp, PivotRule rule = PivotRule::kLeastIndex);

/// Primal point and objective value at a basis (pivots is 0).
GridSimplexResult grid_lp_point(const GridLP& lp, const Basis& b);

/// Primal feasible with nonnegative reduced costs.
bool is_optimal_basis(const GridLP& lp, const Basis& b);

}  // namespace gridcube

#endif  // GRIDCUBE_LPGRID_HPP
