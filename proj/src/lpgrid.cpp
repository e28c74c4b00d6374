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

#include "gridcube/lpgrid.hpp"

#include <atomic>
#include <optional>
#include <string>

#include "gridcube/config.hpp"
#include "gridcube/errors.hpp"
#include "gridcube/witness.hpp"

namespace gridcube {

void GridLP::validate() const {
  if (p.size() != m.n()) throw InvalidInputError("Grid-LP p must have one entry per block");
  if (q.size() != m.m()) throw InvalidInputError("Grid-LP q must have one entry per row");
}

Basis slack_basis(const BlockType& type) { return all_w_basis(type); }

namespace {

// Row j is the transpose of the basic column of block j, i.e. A_B^T.
Matrix basis_transpose(const BlockMatrix& m, const Basis& b) {
  const std::size_t n = m.n();
  Matrix r(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (b[j] == m.type().size(j)) {
      r(j, j) = 1;
    } else {
      auto row = m.row(j, b[j]);
      for (std::size_t k = 0; k < n; ++k) r(j, k) = row[k];
    }
  }
  return r;
}

// x_B = A_B^{-1} p.
std::optional<Vector> basic_point(const BlockMatrix& m, const Vector& p, const Basis& b) {
  return solve(basis_transpose(m, b).transpose(), p);
}

}  // namespace

bool is_grid_lp(const BlockMatrix& m, const Vector& p, Exec exec) {
  if (p.size() != m.n()) throw InvalidInputError("Grid-LP p must have one entry per block");
  const BlockType grown = m.type().grown();
  const std::uint64_t total = grown.vertex_count();
  check_cap(total, enumeration_cap(), "Grid-LP bases");
  std::atomic<bool> ok{true};
  for_each_index(total, exec, [&](std::uint64_t rank) {
    if (!ok.load(std::memory_order_relaxed)) return;
    const auto x = basic_point(m, p, selector_unrank(grown, rank));
    if (!x || !all_positive(*x)) ok.store(false);
  });
  return ok.load();
}

Vector reduced_costs(const GridLP& lp, const Basis& b) {
  lp.validate();
  const BlockType& type = lp.m.type();
  const BlockType grown = type.grown();
  check_selector(grown, b);
  Vector cb(type.blocks());
  for (std::size_t j = 0; j < type.blocks(); ++j)
    if (b[j] != type.size(j)) cb[j] = lp.q[type.flat(j, b[j])];
  // y solves A_B^T y = c_B.
  const auto y = solve(basis_transpose(lp.m, b), cb);
  if (!y) throw NotPMatrixError("singular Grid-LP basis " + selector_key(b));
  Vector rc(grown.rows());
  for (std::size_t j = 0; j < type.blocks(); ++j) {
    for (int k = 0; k <= type.size(j); ++k) {
      if (k == b[j]) continue;
      if (k == type.size(j)) rc[grown.flat(j, k)] = -(*y)[j];
      else rc[grown.flat(j, k)] = lp.q[type.flat(j, k)] - dot(lp.m.row(j, k), *y);
    }
  }
  return rc;
}

bool reduced_cost_identity_check(const GridLP& lp, const Basis& b) {
  const Vector rc = reduced_costs(lp, b);
  const GLCPInstance inst{lp.m, lp.q};
  const auto sol = basic_solution(inst, b);
  if (!sol) return false;
  const BlockType& type = lp.m.type();
  const BlockType grown = type.grown();
  for (std::size_t j = 0; j < type.blocks(); ++j)
    for (int k = 0; k <= type.size(j); ++k)
      if (k != b[j] && rc[grown.flat(j, k)] != basic_value(inst, *sol, j, k)) return false;
  return true;
}

GridLP dual_lp_from_glcp(const GLCPInstance& inst, const Matrix& x, const Vector& v) {
  inst.validate();
  if (!verify_proper(inst.m, x)) throw PreconditionError("dual_lp_from_glcp: X is not a proper witness");
  if (v.size() != inst.m.n() || !all_positive(v)) throw PreconditionError("dual_lp_from_glcp: v must be positive");
  const auto p = solve(x.transpose(), v);
  if (!p) throw PreconditionError("dual_lp_from_glcp: singular witness");
  return GridLP{inst.m, *p, inst.q};
}

GLCPInstance glcp_from_grid_lp(const GridLP& lp) {
  lp.validate();
  if (!is_grid_lp(lp.m, lp.p)) throw PreconditionError("glcp_from_grid_lp: not a Grid-LP");
  return GLCPInstance{lp.m, lp.q};
}

GridSimplexResult grid_simplex(const GridLP& lp, PivotRule rule) {
  lp.validate();
  const BlockType& type = lp.m.type();
  const BlockType grown = type.grown();
  GridSimplexResult out;
  Basis b = slack_basis(type);
  for (;;) {
    const Vector rc = reduced_costs(lp, b);
    std::optional<std::pair<std::size_t, int>> move;
    for (std::size_t j = 0; j < type.blocks(); ++j) {
      for (int k = 0; k <= type.size(j); ++k) {
        if (k == b[j]) continue;
        const Rational& r = rc[grown.flat(j, k)];
        if (sgn(r) == 0)
          throw DegenerateError("zero reduced cost at basis " + selector_key(b));
        if (sgn(r) > 0) continue;
        if (!move || (rule == PivotRule::kMostNegative && r < rc[grown.flat(move->first, move->second)]))
          move = {j, k};
      }
      if (move && rule == PivotRule::kLeastIndex) break;
    }
    if (!move) break;
    b[move->first] = move->second;
    if (++out.pivots > grown.vertex_count()) throw PreconditionError("grid simplex cycled");
  }
  GridSimplexResult point = grid_lp_point(lp, b);
  point.pivots = out.pivots;
  return point;
}

GridSimplexResult grid_lp_point(const GridLP& lp, const Basis& b) {
  lp.validate();
  const BlockType& type = lp.m.type();
  check_selector(type.grown(), b);
  const auto xb = basic_point(lp.m, lp.p, b);
  if (!xb) throw NotPMatrixError("singular Grid-LP basis " + selector_key(b));
  GridSimplexResult out;
  out.u.assign(type.rows(), Rational(0));
  for (std::size_t j = 0; j < type.blocks(); ++j)
    if (b[j] != type.size(j)) out.u[type.flat(j, b[j])] = (*xb)[j];
  out.value = dot(lp.q, out.u);
  out.basis = b;
  return out;
}

bool is_optimal_basis(const GridLP& lp, const Basis& b) {
  lp.validate();
  check_selector(lp.m.type().grown(), b);
  const auto xb = basic_point(lp.m, lp.p, b);
  if (!xb || !all_nonnegative(*xb)) return false;
  return all_nonnegative(reduced_costs(lp, b));
}

}  // namespace gridcube
