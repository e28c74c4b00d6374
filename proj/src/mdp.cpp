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

#include "gridcube/mdp.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <string>

#include "gridcube/config.hpp"
#include "gridcube/core.hpp"
#include "gridcube/errors.hpp"

namespace gridcube {

void DiscountedMDP::validate() const {
  const BlockType& a = p.type();
  if (r.size() != a.rows()) throw InvalidInputError("MDP needs one reward per action");
  if (sgn(gamma) < 0 || gamma >= 1) throw InvalidInputError("MDP discount must lie in [0, 1)");
  for (std::size_t row = 0; row < a.rows(); ++row) {
    Rational sum = 0;
    for (std::size_t k = 0; k < a.blocks(); ++k) {
      if (sgn(p.entries()(row, k)) < 0) throw InvalidInputError("MDP transition probabilities must be nonnegative");
      sum += p.entries()(row, k);
    }
    if (sum != 1)
      throw InvalidInputError("MDP transition row " + std::to_string(row + 1) + " sums to " + to_string(sum));
  }
}

Vector policy_value(const DiscountedMDP& mdp, const Policy& pi) {
  const BlockType& a = mdp.actions();
  check_selector(a, pi);
  const std::size_t n = a.blocks();
  Matrix sys = Matrix::identity(n) - mdp.gamma * mdp.p.representative(pi);
  Vector rhs(n);
  for (std::size_t j = 0; j < n; ++j) rhs[j] = mdp.r[a.flat(j, pi[j])];
  auto v = solve(sys, rhs);
  if (!v) throw std::logic_error("I - gamma P_pi is singular");
  return *v;
}

Vector action_values(const DiscountedMDP& mdp, const Vector& v) {
  Vector out = mdp.p.entries() * v;
  for (std::size_t row = 0; row < out.size(); ++row) out[row] = mdp.r[row] + mdp.gamma * out[row];
  return out;
}

Vector bellman_operator(const DiscountedMDP& mdp, const Vector& v) {
  const BlockType& a = mdp.actions();
  const Vector qv = action_values(mdp, v);
  Vector out(a.blocks());
  for (std::size_t j = 0; j < a.blocks(); ++j) {
    out[j] = qv[a.flat(j, 0)];
    for (int i = 1; i < a.size(j); ++i) out[j] = std::max(out[j], qv[a.flat(j, i)]);
  }
  return out;
}

std::vector<std::vector<int>> argmax_sets(const DiscountedMDP& mdp, const Vector& v) {
  const BlockType& a = mdp.actions();
  const Vector qv = action_values(mdp, v);
  const Vector best = bellman_operator(mdp, v);
  std::vector<std::vector<int>> sets(a.blocks());
  for (std::size_t j = 0; j < a.blocks(); ++j)
    for (int i = 0; i < a.size(j); ++i)
      if (qv[a.flat(j, i)] == best[j]) sets[j].push_back(i);
  return sets;
}

bool satisfies_bellman(const DiscountedMDP& mdp, const Vector& v) {
  return v.size() == mdp.states() && bellman_operator(mdp, v) == v;
}

namespace {

MdpSolution finish(const DiscountedMDP& mdp, Vector v, std::size_t iterations) {
  MdpSolution out;
  out.optimal = argmax_sets(mdp, v);
  for (const auto& s : out.optimal) out.policy.push_back(s.front());
  out.value = std::move(v);
  out.iterations = iterations;
  return out;
}

}  // namespace

MdpSolution solve_optimal(const DiscountedMDP& mdp, MdpMethod method, Exec exec) {
  mdp.validate();
  const BlockType& a = mdp.actions();
  if (method == MdpMethod::kBruteForce) {
    const std::uint64_t total = a.vertex_count();
    check_cap(total, enumeration_cap(), "MDP policies");
    constexpr auto kNone = std::numeric_limits<std::uint64_t>::max();
    std::atomic<std::uint64_t> first{kNone};
    for_each_index(total, exec, [&](std::uint64_t rank) {
      if (rank > first.load(std::memory_order_relaxed)) return;
      if (!satisfies_bellman(mdp, policy_value(mdp, selector_unrank(a, rank)))) return;
      std::uint64_t seen = first.load();
      while (rank < seen && !first.compare_exchange_weak(seen, rank)) {
      }
    });
    if (first.load() == kNone) throw std::logic_error("no policy satisfies the Bellman equations");
    return finish(mdp, policy_value(mdp, selector_unrank(a, first.load())), 0);
  }

  Policy pi(a.blocks(), 0);
  std::size_t rounds = 0;
  for (;;) {
    const Vector v = policy_value(mdp, pi);
    const Vector qv = action_values(mdp, v);
    bool changed = false;
    for (std::size_t j = 0; j < a.blocks(); ++j) {
      int best = pi[j];
      for (int i = 0; i < a.size(j); ++i)
        if (qv[a.flat(j, i)] > qv[a.flat(j, best)]) best = i;
      if (best != pi[j]) {
        // Switch to the least index among the maximizers.
        for (int i = 0; i < a.size(j); ++i)
          if (qv[a.flat(j, i)] == qv[a.flat(j, best)]) {
            best = i;
            break;
          }
        pi[j] = best;
        changed = true;
      }
    }
    if (!changed) return finish(mdp, v, rounds);
    ++rounds;
  }
}

ValueIterationResult value_iteration(const DiscountedMDP& mdp, const Rational& eps) {
  mdp.validate();
  if (sgn(eps) <= 0) throw PreconditionError("value_iteration: eps must be positive");
  ValueIterationResult out;
  out.value.assign(mdp.states(), Rational(0));
  if (sgn(mdp.gamma) == 0) {
    out.value = bellman_operator(mdp, out.value);
    out.iterations = 1;
    return out;
  }
  const Rational rmax = max_abs(mdp.r);
  const Rational step_bound = eps * (1 - mdp.gamma) / (2 * mdp.gamma);
  const Rational cap_bound = eps * (1 - mdp.gamma);
  Rational gamma_power = 1;
  for (;;) {
    Vector next = bellman_operator(mdp, out.value);
    ++out.iterations;
    gamma_power *= mdp.gamma;
    const Rational diff = max_abs(next - out.value);
    out.value = std::move(next);
    if (diff <= step_bound || gamma_power * rmax <= cap_bound) return out;
  }
}

Rational default_offset(const DiscountedMDP& mdp) {
  if (mdp.r.empty()) return -1;
  Rational lo = mdp.r.front();
  for (const auto& x : mdp.r) lo = std::min(lo, x);
  return lo - 1;
}

GLCPInstance mdp_to_kglcp(const DiscountedMDP& mdp, const Rational& d) {
  mdp.validate();
  for (const auto& x : mdp.r)
    if (!(d < x)) throw PreconditionError("mdp_to_kglcp: d = " + to_string(d) + " is not below every reward");
  const BlockType& a = mdp.actions();
  GLCPInstance inst;
  inst.m = StochasticKForm{mdp.gamma, mdp.p}.matrix();
  inst.q.resize(a.rows());
  for (std::size_t row = 0; row < a.rows(); ++row) inst.q[row] = d - mdp.r[row];
  return inst;
}

Vector mdp_value_from_glcp(const DiscountedMDP& mdp, const Rational& d, const Vector& z) {
  const Rational shift = d / (1 - mdp.gamma);
  Vector v = z;
  for (auto& x : v) x += shift;
  return v;
}

MdpFromGlcp kglcp_to_mdp(const GLCPInstance& inst) {
  inst.validate();
  const auto check = as_stochastic_k(inst.m);
  if (!check) throw PreconditionError("kglcp_to_mdp: matrix is not stochastic-K (" + check.reason + ")");
  if (!all_nonpositive(inst.q)) throw PreconditionError("kglcp_to_mdp: right-hand side must be nonpositive");
  MdpFromGlcp out;
  out.mdp.p = check.form->p;
  out.mdp.gamma = check.form->gamma;
  out.mdp.r.resize(inst.q.size());
  for (std::size_t row = 0; row < inst.q.size(); ++row) out.mdp.r[row] = -inst.q[row];
  out.offset = 0;
  return out;
}

GridLP mdp_to_grid_lp(const DiscountedMDP& mdp, const Vector& p, const std::optional<Rational>& d) {
  if (p.size() != mdp.states() || !all_positive(p)) throw PreconditionError("mdp_to_grid_lp: p must be positive");
  const GLCPInstance inst = mdp_to_kglcp(mdp, d.value_or(default_offset(mdp)));
  return GridLP{inst.m, p, inst.q};
}

DiscountReduction reduce_discount(const DiscountedMDP& mdp) {
  mdp.validate();
  const BlockType& a = mdp.actions();
  DiscountReduction out;
  out.f = 1;
  for (std::size_t row = 0; row < a.rows(); ++row) out.f = std::min(out.f, mdp.p.entries()(row, a.block_of(row)));
  out.kappa = mdp.gamma * (1 - out.f);
  out.lambda = 1 - mdp.gamma * out.f;
  if (sgn(mdp.gamma) == 0) {
    out.mdp = mdp;
    return out;
  }
  if (out.f == 1) {
    out.mdp = DiscountedMDP{uniform_stochastic(a), mdp.r, 0};
    return out;
  }
  const Matrix shifted = mdp.p.entries() - out.f * BlockMatrix::identity_pattern(a).entries();
  out.mdp = DiscountedMDP{BlockMatrix(a, (mdp.gamma / out.kappa) * shifted), mdp.r, out.kappa / out.lambda};
  return out;
}

DiscountedMDP restrict_actions(const DiscountedMDP& mdp, const std::vector<std::optional<int>>& fixed) {
  const BlockType& a = mdp.actions();
  if (fixed.size() != a.blocks()) throw InvalidInputError("restrict_actions: one entry per state expected");
  std::vector<int> sizes;
  std::vector<std::size_t> rows;
  for (std::size_t j = 0; j < a.blocks(); ++j) {
    if (fixed[j]) {
      if (*fixed[j] < 0 || *fixed[j] >= a.size(j)) throw InvalidInputError("restrict_actions: action out of range");
      sizes.push_back(1);
      rows.push_back(a.flat(j, *fixed[j]));
    } else {
      sizes.push_back(a.size(j));
      for (int i = 0; i < a.size(j); ++i) rows.push_back(a.flat(j, i));
    }
  }
  DiscountedMDP out;
  out.p = BlockMatrix(BlockType(sizes), mdp.p.entries().select_rows(rows));
  for (std::size_t row : rows) out.r.push_back(mdp.r[row]);
  out.gamma = mdp.gamma;
  return out;
}

}  // namespace gridcube
