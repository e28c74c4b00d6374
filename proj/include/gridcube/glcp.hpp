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

#ifndef GRIDCUBE_GLCP_HPP
#define GRIDCUBE_GLCP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gridcube/block.hpp"
#include "gridcube/parallel.hpp"

namespace gridcube {

/// w - Mz = q, w, z >= 0, z_j * prod_i w^j_i = 0 for every block j.
struct GLCPInstance {
  BlockMatrix m;
  Vector q;

  void validate() const;
};

struct GLCPSolution {
  Vector w;
  Vector z;

  friend bool operator==(const GLCPSolution&, const GLCPSolution&) = default;
};

/// A vertex of the grid G(b+1), stored as the nonbasic set N: pick i < b_j
/// makes w^j_i nonbasic, pick b_j makes z_j nonbasic. The start vertex with
/// z = 0 is all picks equal to b_j.
using Basis = Selector;

Basis all_w_basis(const BlockType& type);

/// Basic solution at N, or nullopt when [I|-M]_N is singular.
std::optional<GLCPSolution> basic_solution(const GLCPInstance& inst, const Basis& n);

/// Value of the basic variable (j, k), k != n[j], in the basic solution:
/// w^j_k for k < b_j and z_j for k = b_j.
const Rational& basic_value(const GLCPInstance& inst, const GLCPSolution& sol, std::size_t j, int k);

struct SolutionEntry {
  Basis basis;
  GLCPSolution solution;
};

/// All solution bases in mixed-radix order. Both execution modes return the
/// same list.
std::vector<SolutionEntry> brute_force_solve(const GLCPInstance& inst, Exec exec = Exec::kParallel);

/// Distinct (w, z) among brute-force entries (degenerate solutions can have
/// several bases).
std::vector<GLCPSolution> distinct_solutions(const std::vector<SolutionEntry>& entries);

bool verify_solution(const GLCPInstance& inst, const GLCPSolution& sol);

enum class PivotRule { kLeastIndex, kMostNegative };

struct PivotOptions {
  PivotRule rule = PivotRule::kLeastIndex;
  std::optional<Basis> start;
  /// Break ties between exact zeros by perturbing q^j_i with eps^(row+1)
  /// and comparing lexicographically, instead of raising DegenerateError.
  bool lexicographic = false;
};

struct PivotResult {
  Basis basis;
  GLCPSolution solution;
  std::size_t pivots = 0;
  std::vector<Basis> path;  // every visited vertex, start first
};

/// Simple principal pivoting: while some basic variable is negative, swap it
/// into N. Raises DegenerateError on an exact zero, NotPMatrixError on a
/// singular basis and PreconditionError if it revisits more vertices than
/// the grid has.
PivotResult principal_pivot_solve(const GLCPInstance& inst, const PivotOptions& options = {});

/// True iff z strictly grows (componentwise >=, not equal) along the path.
bool check_k_monotonicity(const GLCPInstance& inst, const std::vector<Basis>& path);

/// Signs of all basic variables at N, flat over (j, k) with k in [0, b_j];
/// the entry for k = n[j] is 0. Exact zeros raise DegenerateError unless
/// lexicographic is set.
std::vector<int> vertex_signs(const GLCPInstance& inst, const Basis& n, bool lexicographic = false);

}  // namespace gridcube

#endif  // GRIDCUBE_GLCP_HPP
