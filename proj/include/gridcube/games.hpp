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

#ifndef GRIDCUBE_GAMES_HPP
#define GRIDCUBE_GAMES_HPP

#include <cstddef>
#include <set>
#include <vector>

#include "gridcube/core.hpp"
#include "gridcube/glcp.hpp"
#include "gridcube/mdp.hpp"
#include "gridcube/uso.hpp"

namespace gridcube {

enum class Owner { kMax, kMin };

/// Perfect-information discounted game: each state is controlled by one of
/// the two players.
struct StochasticGame {
  DiscountedMDP mdp;
  std::vector<Owner> owner;

  std::size_t states() const { return mdp.states(); }
  void validate() const;
  /// +1 for MAX states, -1 for MIN states.
  SignatureVector signature() const;
};

StochasticGame game_from_mdp(const DiscountedMDP& mdp, Owner owner = Owner::kMax);

/// v_j = max (MAX) or min (MIN) over the action values of state j.
bool check_optimality(const StochasticGame& g, const Vector& v);

struct GameSolution {
  Policy policy;  // joint: one action per state
  Vector value;
  std::size_t iterations = 0;
};

/// MAX improves while MIN answers with an exact best response.
GameSolution strategy_iteration(const StochasticGame& g);

/// Enumerates all joint policies and keeps the optimal ones.
struct GameBruteForce {
  Vector value;
  std::vector<Policy> optimal;
};
GameBruteForce brute_force_game(const StochasticGame& g, Exec exec = Exec::kParallel);

/// GLCP(S M S, S q) with M = (E - gamma P_Cbar)(I - gamma P_C)^{-1} and
/// q = M r_C - r_Cbar, where C is the last action of every state. States
/// with one action get a duplicate of it first; `game` is the padded game.
struct SplitFormulation {
  StochasticGame game;
  GLCPInstance inst;
  SignatureVector s;
  BlockMatrix core;  // M before signing
  Vector core_q;     // q before signing
};
SplitFormulation game_to_pglcp_split(const StochasticGame& g);
/// v = (I - gamma P_C)^{-1} S (z + S r_C).
Vector game_values_from_split(const SplitFormulation& f, const Vector& z);

/// GLCP(S M S, S q) of full type a with M = E - gamma P and
/// q = -r + gamma P S h - S h, h = d / (1 - gamma). Requires d > max |r|.
struct BoundedFormulation {
  GLCPInstance inst;
  SignatureVector s;
  Rational h;
};
BoundedFormulation game_to_pglcp_bounded(const StochasticGame& g, const Rational& d);
/// v = S (z - h).
Vector game_values_from_bounded(const BoundedFormulation& f, const Vector& z);

/// The game whose split formulation is a positive rescaling of
/// GLCP(S H S, S q) for the unsigned core H with proper witness X. Its
/// GLCP solutions map back through z = H z', w = L^{-1} w'.
struct GameFromGlcp {
  StochasticGame game;
  DiagonalScaling scaling;
};
GameFromGlcp pglcp_to_game(const GLCPInstance& inst, const SignatureVector& s, const Matrix& x);

/// Orientation of the split formulation and the MIN directions F; reversing
/// F gives the orientation of the unsigned core.
struct SignedUso {
  GridUSO uso;
  std::set<std::size_t> f;
};
SignedUso signed_uso_from_game(const StochasticGame& g);

struct SplitRecord {
  std::size_t state = 0;      // split state
  std::size_t new_state = 0;  // appended state, controlled by the same player
  Owner owner = Owner::kMax;
  Rational gamma;             // discount before the split
  Rational delta;             // (1 + gamma) / 2
};

/// Moves the last action of `state` into a new binary state. The new game
/// has discount (1 + gamma) / 2 and the value of `state` in the old game is
/// the value of the new state.
std::pair<StochasticGame, SplitRecord> game_split_step(const StochasticGame& g, std::size_t state);

/// Splits until every state has at most two actions.
std::pair<StochasticGame, std::vector<SplitRecord>> game_to_binary(const StochasticGame& g);

/// Replays the records backwards on values of the binary game.
Vector recover_game_values(const std::vector<SplitRecord>& records, const Vector& v);

}  // namespace gridcube

#endif  // GRIDCUBE_GAMES_HPP
