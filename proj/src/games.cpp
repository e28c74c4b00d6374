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

#include "gridcube/games.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "gridcube/config.hpp"
#include "gridcube/errors.hpp"
#include "gridcube/witness.hpp"

namespace gridcube {

void StochasticGame::validate() const {
  mdp.validate();
  if (owner.size() != mdp.states()) throw InvalidInputError("game needs one owner per state");
}

SignatureVector StochasticGame::signature() const {
  SignatureVector s(owner.size());
  for (std::size_t j = 0; j < owner.size(); ++j) s[j] = owner[j] == Owner::kMax ? 1 : -1;
  return s;
}

StochasticGame game_from_mdp(const DiscountedMDP& mdp, Owner owner) {
  return StochasticGame{mdp, std::vector<Owner>(mdp.states(), owner)};
}

bool check_optimality(const StochasticGame& g, const Vector& v) {
  g.validate();
  if (v.size() != g.states()) return false;
  const BlockType& a = g.mdp.actions();
  const Vector qv = action_values(g.mdp, v);
  for (std::size_t j = 0; j < a.blocks(); ++j) {
    Rational best = qv[a.flat(j, 0)];
    for (int i = 1; i < a.size(j); ++i)
      best = g.owner[j] == Owner::kMax ? std::max(best, qv[a.flat(j, i)]) : std::min(best, qv[a.flat(j, i)]);
    if (best != v[j]) return false;
  }
  return true;
}

GameSolution strategy_iteration(const StochasticGame& g) {
  g.validate();
  const BlockType& a = g.mdp.actions();
  const std::size_t n = a.blocks();
  Policy joint(n, 0);
  GameSolution out;
  for (;;) {
    // MIN best response against the fixed MAX choices, solved as a
    // maximization of negated rewards.
    std::vector<std::optional<int>> fixed(n);
    for (std::size_t j = 0; j < n; ++j)
      if (g.owner[j] == Owner::kMax) fixed[j] = joint[j];
    DiscountedMDP response = restrict_actions(g.mdp, fixed);
    for (auto& x : response.r) x = -x;
    const MdpSolution best = solve_optimal(response, MdpMethod::kPolicyIteration);
    Vector v = best.value;
    for (auto& x : v) x = -x;
    for (std::size_t j = 0; j < n; ++j)
      if (g.owner[j] == Owner::kMin) joint[j] = best.policy[j];

    const Vector qv = action_values(g.mdp, v);
    bool changed = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (g.owner[j] != Owner::kMax) continue;
      int pick = joint[j];
      for (int i = 0; i < a.size(j); ++i)
        if (qv[a.flat(j, i)] > qv[a.flat(j, pick)]) pick = i;
      if (pick == joint[j]) continue;
      for (int i = 0; i < a.size(j); ++i)
        if (qv[a.flat(j, i)] == qv[a.flat(j, pick)]) {
          pick = i;
          break;
        }
      joint[j] = pick;
      changed = true;
    }
    if (!changed) {
      out.policy = joint;
      out.value = std::move(v);
      return out;
    }
    ++out.iterations;
  }
}

GameBruteForce brute_force_game(const StochasticGame& g, Exec exec) {
  g.validate();
  const BlockType& a = g.mdp.actions();
  const std::uint64_t total = a.vertex_count();
  check_cap(total, enumeration_cap(), "joint policies");
  std::vector<char> optimal(total, 0);
  for_each_index(total, exec, [&](std::uint64_t rank) {
    optimal[rank] = check_optimality(g, policy_value(g.mdp, selector_unrank(a, rank))) ? 1 : 0;
  });
  GameBruteForce out;
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    if (!optimal[rank]) continue;
    out.optimal.push_back(selector_unrank(a, rank));
    if (out.optimal.size() == 1) out.value = policy_value(g.mdp, out.optimal.front());
  }
  if (out.optimal.empty()) throw std::logic_error("no joint policy satisfies the optimality equations");
  return out;
}

namespace {

StochasticGame pad_single_actions(const StochasticGame& g) {
  const BlockType& a = g.mdp.actions();
  std::vector<int> sizes;
  std::vector<std::size_t> rows;
  for (std::size_t j = 0; j < a.blocks(); ++j) {
    for (int i = 0; i < a.size(j); ++i) rows.push_back(a.flat(j, i));
    if (a.size(j) == 1) rows.push_back(a.flat(j, 0));
    sizes.push_back(std::max(a.size(j), 2));
  }
  StochasticGame out;
  out.owner = g.owner;
  out.mdp.gamma = g.mdp.gamma;
  out.mdp.p = BlockMatrix(BlockType(sizes), g.mdp.p.entries().select_rows(rows));
  for (std::size_t r : rows) out.mdp.r.push_back(g.mdp.r[r]);
  return out;
}

}  // namespace

SplitFormulation game_to_pglcp_split(const StochasticGame& g) {
  g.validate();
  SplitFormulation out;
  out.game = pad_single_actions(g);
  const DiscountedMDP& mdp = out.game.mdp;
  const BlockType& a = mdp.actions();
  const std::size_t n = a.blocks();

  std::vector<int> rest_sizes;
  std::vector<std::size_t> rest_rows, last_rows;
  for (std::size_t j = 0; j < n; ++j) {
    rest_sizes.push_back(a.size(j) - 1);
    for (int i = 0; i + 1 < a.size(j); ++i) rest_rows.push_back(a.flat(j, i));
    last_rows.push_back(a.flat(j, a.size(j) - 1));
  }
  const BlockType rest(rest_sizes);
  const Matrix pc = mdp.p.entries().select_rows(last_rows);
  const Matrix pcbar = mdp.p.entries().select_rows(rest_rows);
  const auto kinv = inverse(Matrix::identity(n) - mdp.gamma * pc);
  if (!kinv) throw std::logic_error("I - gamma P_C is singular");
  const Matrix m = (BlockMatrix::identity_pattern(rest).entries() - mdp.gamma * pcbar) * *kinv;
  Vector rc, rcbar;
  for (std::size_t r : last_rows) rc.push_back(mdp.r[r]);
  for (std::size_t r : rest_rows) rcbar.push_back(mdp.r[r]);

  out.core = BlockMatrix(rest, m);
  out.core_q = m * rc - rcbar;
  out.s = out.game.signature();
  out.inst = GLCPInstance{signed_conjugate(out.core, out.s), signed_rhs(rest, out.core_q, out.s)};
  return out;
}

Vector game_values_from_split(const SplitFormulation& f, const Vector& z) {
  const DiscountedMDP& mdp = f.game.mdp;
  const BlockType& a = mdp.actions();
  const std::size_t n = a.blocks();
  if (z.size() != n) throw InvalidInputError("split recovery: z has the wrong length");
  std::vector<std::size_t> last_rows;
  for (std::size_t j = 0; j < n; ++j) last_rows.push_back(a.flat(j, a.size(j) - 1));
  Vector rhs(n);
  for (std::size_t j = 0; j < n; ++j) rhs[j] = f.s[j] * z[j] + mdp.r[last_rows[j]];
  const auto v = solve(Matrix::identity(n) - mdp.gamma * mdp.p.entries().select_rows(last_rows), rhs);
  if (!v) throw std::logic_error("I - gamma P_C is singular");
  return *v;
}

BoundedFormulation game_to_pglcp_bounded(const StochasticGame& g, const Rational& d) {
  g.validate();
  if (!(d > max_abs(g.mdp.r))) throw PreconditionError("game_to_pglcp_bounded: d must exceed every |reward|");
  const DiscountedMDP& mdp = g.mdp;
  const BlockType& a = mdp.actions();
  BoundedFormulation out;
  out.s = g.signature();
  out.h = d / (1 - mdp.gamma);
  Vector sh(a.blocks());
  for (std::size_t j = 0; j < a.blocks(); ++j) sh[j] = out.s[j] * out.h;
  const BlockMatrix m = StochasticKForm{mdp.gamma, mdp.p}.matrix();
  Vector q = mdp.gamma * (mdp.p.entries() * sh) - mdp.r - expand_to_blocks(a, sh);
  out.inst = GLCPInstance{signed_conjugate(m, out.s), signed_rhs(a, q, out.s)};
  return out;
}

Vector game_values_from_bounded(const BoundedFormulation& f, const Vector& z) {
  if (z.size() != f.s.size()) throw InvalidInputError("bounded recovery: z has the wrong length");
  Vector v(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) v[j] = f.s[j] * (z[j] - f.h);
  return v;
}

GameFromGlcp pglcp_to_game(const GLCPInstance& inst, const SignatureVector& s, const Matrix& x) {
  inst.validate();
  const BlockMatrix core = signed_conjugate(inst.m, s);
  const Vector q = signed_rhs(inst.m.type(), inst.q, s);
  if (!verify_proper(core, x)) throw PreconditionError("pglcp_to_game: X is not a proper witness of the core");
  const WitnessStochasticForm wsf = witness_stochastic_form(core, x);
  const BlockType& b = core.type();
  const BlockType& grown = wsf.form.p.type();

  GameFromGlcp out;
  out.scaling = wsf.scaling;
  out.game.mdp.p = wsf.form.p;
  out.game.mdp.gamma = wsf.form.gamma;
  out.game.mdp.r.assign(grown.rows(), Rational(0));
  for (std::size_t j = 0; j < b.blocks(); ++j)
    for (int i = 0; i < b.size(j); ++i)
      out.game.mdp.r[grown.flat(j, i)] = -wsf.scaling.left[b.flat(j, i)] * q[b.flat(j, i)];
  for (int sj : s) out.game.owner.push_back(sj > 0 ? Owner::kMax : Owner::kMin);
  return out;
}

SignedUso signed_uso_from_game(const StochasticGame& g) {
  const SplitFormulation f = game_to_pglcp_split(g);
  SignedUso out;
  out.uso = uso_from_glcp(f.inst);
  for (std::size_t j = 0; j < g.owner.size(); ++j)
    if (g.owner[j] == Owner::kMin) out.f.insert(j);
  return out;
}

std::pair<StochasticGame, SplitRecord> game_split_step(const StochasticGame& g, std::size_t state) {
  g.validate();
  const DiscountedMDP& mdp = g.mdp;
  const BlockType& a = mdp.actions();
  const std::size_t n = a.blocks();
  if (state >= n) throw InvalidInputError("game_split_step: state out of range");
  if (a.size(state) < 2) throw PreconditionError("game_split_step: state has a single action, nothing to split");

  SplitRecord rec;
  rec.state = state;
  rec.new_state = n;
  rec.owner = g.owner[state];
  rec.gamma = mdp.gamma;
  rec.delta = (1 + mdp.gamma) / 2;
  const Rational& gamma = mdp.gamma;
  const Rational& delta = rec.delta;
  const Rational half = gamma / (2 * delta);

  std::vector<int> sizes(a.sizes());
  sizes[state] -= 1;
  sizes.push_back(2);
  const BlockType type(sizes);
  Matrix p(type.rows(), n + 1);
  Vector r(type.rows());

  // A transition row of the old game with the mass on `state` moved to the
  // new state and every probability multiplied by `factor`.
  auto moved = [&](std::size_t row, const Rational& factor, std::size_t out_row) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k == state) p(out_row, n) += factor * mdp.p.entries()(row, k);
      else p(out_row, k) += factor * mdp.p.entries()(row, k);
    }
  };

  for (std::size_t j = 0; j < n; ++j) {
    for (int i = 0; i < type.size(j); ++i) {
      const std::size_t src = a.flat(j, i);
      const std::size_t dst = type.flat(j, i);
      if (j == state) {
        moved(src, gamma / delta, dst);
        p(dst, state) += 1 / delta - 1;
        r[dst] = mdp.r[src];
      } else {
        moved(src, half, dst);
        p(dst, j) += 1 / (2 * delta);
        r[dst] = mdp.r[src] / 2;
      }
    }
  }
  const std::size_t last = a.flat(state, a.size(state) - 1);
  moved(last, half, type.flat(n, 0));
  p(type.flat(n, 0), n) += 1 / (2 * delta);
  r[type.flat(n, 0)] = mdp.r[last] / 2;
  p(type.flat(n, 1), state) = 1;
  r[type.flat(n, 1)] = 0;

  StochasticGame out;
  out.mdp = DiscountedMDP{BlockMatrix(type, std::move(p)), std::move(r), delta};
  out.owner = g.owner;
  out.owner.push_back(rec.owner);
  out.validate();
  return {std::move(out), rec};
}

std::pair<StochasticGame, std::vector<SplitRecord>> game_to_binary(const StochasticGame& g) {
  g.validate();
  StochasticGame cur = g;
  std::vector<SplitRecord> records;
  for (;;) {
    const BlockType& a = cur.mdp.actions();
    std::optional<std::size_t> wide;
    for (std::size_t j = 0; j < a.blocks() && !wide; ++j)
      if (a.size(j) > 2) wide = j;
    if (!wide) return {std::move(cur), std::move(records)};
    auto [next, rec] = game_split_step(cur, *wide);
    cur = std::move(next);
    records.push_back(rec);
  }
}

Vector recover_game_values(const std::vector<SplitRecord>& records, const Vector& v) {
  Vector cur = v;
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    if (cur.size() != it->new_state + 1) throw InvalidInputError("game value recovery: size mismatch");
    cur[it->state] = cur[it->new_state];
    cur.pop_back();
  }
  return cur;
}

}  // namespace gridcube
