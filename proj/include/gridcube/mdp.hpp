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

#ifndef GRIDCUBE_MDP_HPP
#define GRIDCUBE_MDP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gridcube/block.hpp"
#include "gridcube/glcp.hpp"
#include "gridcube/lpgrid.hpp"
#include "gridcube/parallel.hpp"

namespace gridcube {

/// n states; block j of `p` holds one transition row per action of state j,
/// and r holds the matching rewards.
struct DiscountedMDP {
  BlockMatrix p;
  Vector r;
  Rational gamma;

  const BlockType& actions() const { return p.type(); }
  std::size_t states() const { return p.n(); }
  void validate() const;
};

/// One action index per state.
using Policy = std::vector<int>;

/// Solves (I - gamma P_pi) v = r_pi.
Vector policy_value(const DiscountedMDP& mdp, const Policy& pi);

/// r^j_i + gamma p^j_i . v for every (state, action) row.
Vector action_values(const DiscountedMDP& mdp, const Vector& v);

/// (T v)_j = max_i of the action values of state j.
Vector bellman_operator(const DiscountedMDP& mdp, const Vector& v);

/// Maximizing actions of every state under v.
std::vector<std::vector<int>> argmax_sets(const DiscountedMDP& mdp, const Vector& v);

bool satisfies_bellman(const DiscountedMDP& mdp, const Vector& v);

enum class MdpMethod { kPolicyIteration, kBruteForce };

struct MdpSolution {
  Vector value;
  Policy policy;                          // least-index optimal policy
  std::vector<std::vector<int>> optimal;  // argmax set per state
  std::size_t iterations = 0;             // improvement rounds, 0 for brute force
};

MdpSolution solve_optimal(const DiscountedMDP& mdp, MdpMethod method = MdpMethod::kPolicyIteration,
                          Exec exec = Exec::kParallel);

struct ValueIterationResult {
  Vector value;
  std::size_t iterations = 0;
};

/// Exact rational iterates of the Bellman operator from v = 0. Stops once
/// ||v_{t+1} - v_t|| <= eps (1 - gamma) / (2 gamma), or once gamma^t
/// max|r| <= eps (1 - gamma); either way ||v - v*|| <= eps.
ValueIterationResult value_iteration(const DiscountedMDP& mdp, const Rational& eps);

/// min reward - 1.
Rational default_offset(const DiscountedMDP& mdp);

/// K-GLCP(E - gamma P, -r + d) with z = v - d / (1 - gamma). Requires d to
/// be strictly below every reward.
GLCPInstance mdp_to_kglcp(const DiscountedMDP& mdp, const Rational& d);
Vector mdp_value_from_glcp(const DiscountedMDP& mdp, const Rational& d, const Vector& z);

struct MdpFromGlcp {
  DiscountedMDP mdp;
  Rational offset;  // always 0: r = -q
};

/// Reads a stochastic K-GLCP with q <= 0 as an MDP with rewards -q.
MdpFromGlcp kglcp_to_mdp(const GLCPInstance& inst);

/// GridLP(E - gamma P, p, -r + d). Requires p > 0.
GridLP mdp_to_grid_lp(const DiscountedMDP& mdp, const Vector& p, const std::optional<Rational>& d = std::nullopt);

struct DiscountReduction {
  DiscountedMDP mdp;
  Rational f;
  Rational kappa;
  Rational lambda;
};

/// f = min self-loop probability, kappa = gamma (1 - f), lambda = 1 - gamma f.
/// Returns MDP((gamma / kappa)(P - f E), r, kappa / lambda); its optimal
/// values are lambda times the original ones.
DiscountReduction reduce_discount(const DiscountedMDP& mdp);

/// The MDP restricted to one action per listed state; states with an
/// empty entry keep all their actions.
DiscountedMDP restrict_actions(const DiscountedMDP& mdp, const std::vector<std::optional<int>>& fixed);

}  // namespace gridcube

#endif  // GRIDCUBE_MDP_HPP
