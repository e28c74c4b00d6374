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

#ifndef GRIDCUBE_REDUCE_HPP
#define GRIDCUBE_REDUCE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gridcube/block.hpp"
#include "gridcube/glcp.hpp"
#include "gridcube/lpgrid.hpp"
#include "gridcube/mdp.hpp"

namespace gridcube {

enum class StepKind { kHiddenKToK, kKToHiddenK, kPSplit, kKSplit, kRescale };

std::string step_kind_name(StepKind kind);
StepKind parse_step_kind(const std::string& name);

/// One structural step. Only the fields of the step's kind are filled in.
struct TraceStep {
  StepKind kind = StepKind::kRescale;
  BlockType input_type;
  BlockType output_type;
  std::size_t block = 0;  // split block
  int row = 0;            // split row, 0-based within the block
  Vector f;               // hidden-K to K shift
  Selector c;             // K to hidden-K representative rows
  Matrix mc_inverse;      // M_C^{-1}
  Vector qc;              // q_C
  DiagonalScaling scaling;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// Steps in the order they were applied to the instance.
struct ReductionTrace {
  std::vector<TraceStep> steps;

  void append(const ReductionTrace& other);
  friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

/// Maps a solution of the step's output back to its input.
GLCPSolution recover_step(const TraceStep& step, const GLCPSolution& sol);
/// Replays the steps backwards.
GLCPSolution recover(const ReductionTrace& trace, const GLCPSolution& sol);

struct Reduction {
  GLCPInstance inst;
  ReductionTrace trace;
};

/// A basis N at which sol is the basic solution: per block the first index
/// whose value is zero.
Basis solution_basis(const GLCPInstance& inst, const GLCPSolution& sol);

/// K-GLCP([Y|X], [q - Mf | -f]) of type b+1 with Y = MX. An empty f means
/// the all-ones vector.
Reduction hiddenk_to_k(const GLCPInstance& inst, const Matrix& x, const Vector& f = {});

struct HiddenKReduction {
  GLCPInstance inst;
  Matrix witness;  // proper hidden-K witness of inst.m
  ReductionTrace trace;
};

/// Hidden-K GLCP(M_Cbar M_C^{-1}, q_Cbar - M_Cbar M_C^{-1} q_C) of type b-1
/// with witness M_C. Needs b_j >= 2 and q_C <= 0.
HiddenKReduction k_to_hiddenk(const GLCPInstance& inst, const Selector& c);

/// Per block the last row with q <= 0, if every block has one.
std::optional<Selector> nonpositive_representative(const GLCPInstance& inst);

/// Positive diagonal rescaling (L M H, L q).
Reduction rescale(const GLCPInstance& inst, const DiagonalScaling& scaling);

/// Row scaling that makes m^j_{ij} = 1 throughout.
Reduction normalize_diagonal(const GLCPInstance& inst);

/// Splits the last row of block j off into two new blocks of size one.
/// Requires a normalized diagonal and b_j >= 2.
Reduction pglcp_split_step(const GLCPInstance& inst, std::size_t block);

/// Normalizes, then splits until every block has size one. The result is
/// an LCP of order 2m - n.
Reduction pglcp_to_plcp(const GLCPInstance& inst);

/// Moves row `row` of block j into a new block of size two and rescales so
/// that the result is stochastic-K with factor (1 + gamma) / 2. Requires a
/// stochastic-K matrix and b_j >= 2.
Reduction kglcp_split_step(const GLCPInstance& inst, std::size_t block, int row);

/// Split row for block j: the last row, or with rhs_order the last row with
/// positive right-hand side when there is one.
int kglcp_split_row(const GLCPInstance& inst, std::size_t block, bool rhs_order);

/// Splits blocks left to right until all have size at most two.
Reduction kglcp_to_binary(const GLCPInstance& inst, bool rhs_order = true);

/// hiddenk_to_k with f = 1, stochastic form, binary split with RHS order and
/// k_to_hiddenk on a nonpositive representative.
HiddenKReduction hiddenk_glcp_to_hiddenk_lcp(const GLCPInstance& inst, const Matrix& x);

struct CubeLpReduction {
  GridLP cube;
  Matrix witness;
  ReductionTrace trace;
};

/// Grid-LP to GLCP, the hidden-K pipeline, and back to a Grid-LP with
/// square M. Without x a proper witness is computed.
CubeLpReduction grid_lp_to_cube_lp(const GridLP& lp, const std::optional<Matrix>& x = std::nullopt);

/// Basis of the original Grid-LP from a basis of the cube LP.
Basis recover_grid_lp_basis(const GridLP& lp, const CubeLpReduction& red, const Basis& cube_basis);

struct BinaryMdpReduction {
  DiscountedMDP mdp;
  Rational offset;  // d of the first GLCP
  ReductionTrace trace;
};

/// MDP to K-GLCP with the default offset, binary split, back to an MDP.
/// An MDP that is already binary comes back unchanged with an empty trace.
BinaryMdpReduction mdp_to_binary_mdp(const DiscountedMDP& mdp);

/// Optimal values of the original MDP from those of the binary one.
Vector recover_mdp_values(const DiscountedMDP& original, const BinaryMdpReduction& red, const Vector& v);

}  // namespace gridcube

#endif  // GRIDCUBE_REDUCE_HPP
