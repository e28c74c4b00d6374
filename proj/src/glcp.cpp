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

#include "gridcube/glcp.hpp"

#include <algorithm>
#include <string>

#include "gridcube/config.hpp"
#include "gridcube/errors.hpp"

namespace gridcube {

void GLCPInstance::validate() const {
  if (q.size() != m.m())
    throw InvalidInputError("GLCP right-hand side has " + std::to_string(q.size()) + " entries, expected " +
                            std::to_string(m.m()));
}

Basis all_w_basis(const BlockType& type) { return Basis(type.sizes().begin(), type.sizes().end()); }

namespace {

void check_basis(const BlockType& type, const Basis& n) { check_selector(type.grown(), n); }

// Row j of [M|I]_N and the matching entry of -q.
Matrix basis_matrix(const GLCPInstance& inst, const Basis& n) {
  const std::size_t dim = inst.m.n();
  Matrix r(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    if (n[j] == inst.m.type().size(j)) {
      r(j, j) = 1;
    } else {
      auto row = inst.m.row(j, n[j]);
      for (std::size_t k = 0; k < dim; ++k) r(j, k) = row[k];
    }
  }
  return r;
}

Vector basis_rhs(const GLCPInstance& inst, const Basis& n) {
  const BlockType& type = inst.m.type();
  Vector rhs(type.blocks());
  for (std::size_t j = 0; j < type.blocks(); ++j)
    if (n[j] != type.size(j)) rhs[j] = -inst.q[type.flat(j, n[j])];
  return rhs;
}

}  // namespace

std::optional<GLCPSolution> basic_solution(const GLCPInstance& inst, const Basis& n) {
  inst.validate();
  check_basis(inst.m.type(), n);
  auto z = solve(basis_matrix(inst, n), basis_rhs(inst, n));
  if (!z) return std::nullopt;
  GLCPSolution sol;
  sol.w = inst.m.entries() * *z + inst.q;
  sol.z = std::move(*z);
  // Nonbasic entries are exactly zero by construction; clear any -0 noise.
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (n[j] == inst.m.type().size(j)) sol.z[j] = 0;
    else sol.w[inst.m.type().flat(j, n[j])] = 0;
  }
  return sol;
}

const Rational& basic_value(const GLCPInstance& inst, const GLCPSolution& sol, std::size_t j, int k) {
  if (k == inst.m.type().size(j)) return sol.z[j];
  return sol.w[inst.m.type().flat(j, k)];
}

std::vector<SolutionEntry> brute_force_solve(const GLCPInstance& inst, Exec exec) {
  inst.validate();
  const BlockType grown = inst.m.type().grown();
  const std::uint64_t total = grown.vertex_count();
  check_cap(total, enumeration_cap(), "GLCP bases");
  std::vector<std::optional<GLCPSolution>> found(total);
  for_each_index(total, exec, [&](std::uint64_t rank) {
    auto sol = basic_solution(inst, selector_unrank(grown, rank));
    if (sol && all_nonnegative(sol->w) && all_nonnegative(sol->z)) found[rank] = std::move(sol);
  });
  std::vector<SolutionEntry> out;
  for (std::uint64_t rank = 0; rank < total; ++rank)
    if (found[rank]) out.push_back({selector_unrank(grown, rank), std::move(*found[rank])});
  return out;
}

std::vector<GLCPSolution> distinct_solutions(const std::vector<SolutionEntry>& entries) {
  std::vector<GLCPSolution> out;
  for (const auto& e : entries)
    if (std::find(out.begin(), out.end(), e.solution) == out.end()) out.push_back(e.solution);
  return out;
}

bool verify_solution(const GLCPInstance& inst, const GLCPSolution& sol) {
  inst.validate();
  const BlockType& type = inst.m.type();
  if (sol.w.size() != type.rows() || sol.z.size() != type.blocks()) return false;
  if (!all_nonnegative(sol.w) || !all_nonnegative(sol.z)) return false;
  if (sol.w - inst.m.entries() * sol.z != inst.q) return false;
  for (std::size_t j = 0; j < type.blocks(); ++j) {
    if (sgn(sol.z[j]) == 0) continue;
    bool some_zero = false;
    for (int i = 0; i < type.size(j); ++i) some_zero = some_zero || sgn(sol.w[type.flat(j, i)]) == 0;
    if (!some_zero) return false;
  }
  return true;
}

std::vector<int> vertex_signs(const GLCPInstance& inst, const Basis& n, bool lexicographic) {
  const BlockType& type = inst.m.type();
  const BlockType grown = type.grown();
  const auto sol = basic_solution(inst, n);
  if (!sol) throw NotPMatrixError("singular basis at vertex " + selector_key(n));

  std::optional<Matrix> rinv;
  std::vector<int> signs(grown.rows(), 0);
  for (std::size_t j = 0; j < type.blocks(); ++j) {
    for (int k = 0; k <= type.size(j); ++k) {
      if (k == n[j]) continue;
      int s = sgn(basic_value(inst, *sol, j, k));
      if (s == 0 && lexicographic) {
        // q^rho gets +eps^(rho+1). A basic w^j_k carries its own eps term
        // plus contributions from picked rows through z; a basic z_j only
        // sees the picked rows.
        if (!rinv) rinv = inverse(basis_matrix(inst, n));
        for (std::size_t rho = 0; rho < type.rows() && s == 0; ++rho) {
          const std::size_t owner = type.block_of(rho);
          const bool picked = n[owner] != type.size(owner) && type.flat(owner, n[owner]) == rho;
          Rational coef = 0;
          if (k == type.size(j)) {
            if (picked) coef = -(*rinv)(j, owner);
          } else {
            const std::size_t row = type.flat(j, k);
            if (row == rho) coef += 1;
            if (picked)
              for (std::size_t c = 0; c < type.blocks(); ++c) coef -= inst.m.entries()(row, c) * (*rinv)(c, owner);
          }
          s = sgn(coef);
        }
      }
      if (s == 0)
        throw DegenerateError("basic variable (" + std::to_string(j + 1) + "," + std::to_string(k + 1) +
                              ") is zero at vertex " + selector_key(n));
      signs[grown.flat(j, k)] = s;
    }
  }
  return signs;
}

PivotResult principal_pivot_solve(const GLCPInstance& inst, const PivotOptions& options) {
  inst.validate();
  const BlockType& type = inst.m.type();
  const BlockType grown = type.grown();
  PivotResult out;
  Basis n = options.start.value_or(all_w_basis(type));
  check_basis(type, n);
  const std::uint64_t limit = grown.vertex_count();
  for (;;) {
    out.path.push_back(n);
    const auto sol = basic_solution(inst, n);
    if (!sol) throw NotPMatrixError("singular basis at vertex " + selector_key(n));
    const std::vector<int> signs = vertex_signs(inst, n, options.lexicographic);
    std::optional<std::pair<std::size_t, int>> move;
    for (std::size_t j = 0; j < type.blocks(); ++j) {
      for (int k = 0; k <= type.size(j); ++k) {
        if (k == n[j] || signs[grown.flat(j, k)] >= 0) continue;
        if (!move) {
          move = {j, k};
        } else if (options.rule == PivotRule::kMostNegative) {
          const Rational& cur = basic_value(inst, *sol, move->first, move->second);
          if (basic_value(inst, *sol, j, k) < cur) move = {j, k};
        }
      }
      if (move && options.rule == PivotRule::kLeastIndex) break;
    }
    if (!move) {
      out.basis = n;
      out.solution = *sol;
      return out;
    }
    n[move->first] = move->second;
    if (++out.pivots > limit) throw PreconditionError("principal pivoting cycled");
  }
}

bool check_k_monotonicity(const GLCPInstance& inst, const std::vector<Basis>& path) {
  for (std::size_t t = 1; t < path.size(); ++t) {
    const auto before = basic_solution(inst, path[t - 1]);
    const auto after = basic_solution(inst, path[t]);
    if (!before || !after) return false;
    if (before->z == after->z) return false;
    for (std::size_t j = 0; j < before->z.size(); ++j)
      if (after->z[j] < before->z[j]) return false;
  }
  return true;
}

}  // namespace gridcube
