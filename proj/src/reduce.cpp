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

#include "gridcube/reduce.hpp"

#include <stdexcept>
#include <utility>

#include "gridcube/core.hpp"
#include "gridcube/errors.hpp"
#include "gridcube/witness.hpp"

namespace gridcube {

namespace {

constexpr std::pair<StepKind, const char*> kStepNames[] = {
    {StepKind::kHiddenKToK, "hiddenk-to-k"}, {StepKind::kKToHiddenK, "k-to-hiddenk"},
    {StepKind::kPSplit, "p-split"},          {StepKind::kKSplit, "k-split"},
    {StepKind::kRescale, "rescale"},
};

void check_shape(const BlockType& type, const GLCPSolution& sol, const char* what) {
  if (sol.w.size() != type.rows() || sol.z.size() != type.blocks())
    throw InvalidInputError(std::string(what) + ": solution does not match the reduced instance");
}

std::vector<int> shrunk_sizes(const BlockType& type, std::size_t block) {
  std::vector<int> sizes = type.sizes();
  sizes[block] -= 1;
  return sizes;
}

// Row index of (block j, row i) after row `removed` of block `block` is taken out.
int index_after_removal(int i, int removed) { return i < removed ? i : i - 1; }

GLCPSolution recover_hiddenk_to_k(const TraceStep& s, const GLCPSolution& sol) {
  const BlockType& b = s.input_type;
  const BlockType& g = s.output_type;
  GLCPSolution out{Vector(b.rows()), Vector(b.blocks())};
  for (std::size_t j = 0; j < b.blocks(); ++j) {
    for (int i = 0; i < b.size(j); ++i) out.w[b.flat(j, i)] = sol.w[g.flat(j, i)];
    out.z[j] = sol.w[g.flat(j, b.size(j))];
  }
  return out;
}

GLCPSolution recover_k_to_hiddenk(const TraceStep& s, const GLCPSolution& sol) {
  const BlockType& b = s.input_type;
  const BlockType& r = s.output_type;
  GLCPSolution out{Vector(b.rows()), s.mc_inverse * (sol.z - s.qc)};
  for (std::size_t j = 0; j < b.blocks(); ++j) {
    int next = 0;
    for (int i = 0; i < b.size(j); ++i) {
      if (i == s.c[j]) out.w[b.flat(j, i)] = sol.z[j];
      else out.w[b.flat(j, i)] = sol.w[r.flat(j, next++)];
    }
  }
  return out;
}

GLCPSolution recover_rescale(const TraceStep& s, const GLCPSolution& sol) {
  GLCPSolution out{Vector(sol.w.size()), Vector(sol.z.size())};
  for (std::size_t r = 0; r < sol.w.size(); ++r) out.w[r] = sol.w[r] / s.scaling.left[r];
  for (std::size_t k = 0; k < sol.z.size(); ++k) out.z[k] = s.scaling.right[k] * sol.z[k];
  return out;
}

GLCPSolution recover_p_split(const TraceStep& s, const GLCPSolution& sol) {
  const BlockType& b = s.input_type;
  const BlockType& o = s.output_type;
  const std::size_t n = b.blocks();
  const std::size_t j = s.block;
  GLCPSolution out{Vector(b.rows()), Vector(sol.z.begin(), sol.z.begin() + static_cast<std::ptrdiff_t>(n))};
  const bool first = sol.z[j] > sol.z[n];
  out.z[j] = first ? sol.z[j] : sol.z[n];
  for (std::size_t k = 0; k < n; ++k) {
    for (int i = 0; i < b.size(k); ++i) {
      Rational& w = out.w[b.flat(k, i)];
      if (k != j) {
        w = sol.w[o.flat(k, i)];
      } else if (i == s.row) {
        w = sol.w[o.flat(n, 0)];
        if (first) w += sol.w[o.flat(n + 1, 0)];
      } else {
        w = sol.w[o.flat(k, index_after_removal(i, s.row))];
        if (!first) w += sol.z[n + 1];
      }
    }
  }
  return out;
}

GLCPSolution recover_k_split(const TraceStep& s, const GLCPSolution& sol) {
  const BlockType& b = s.input_type;
  const BlockType& o = s.output_type;
  const std::size_t n = b.blocks();
  const std::size_t j = s.block;
  GLCPSolution out{Vector(b.rows()), Vector(sol.z.begin(), sol.z.begin() + static_cast<std::ptrdiff_t>(n))};
  out.z[j] = sol.z[n];
  for (std::size_t k = 0; k < n; ++k) {
    for (int i = 0; i < b.size(k); ++i) {
      Rational& w = out.w[b.flat(k, i)];
      if (k != j) w = sol.w[o.flat(k, i)];
      else if (i == s.row) w = sol.w[o.flat(n, 0)];
      else w = sol.w[o.flat(k, index_after_removal(i, s.row))] + sol.w[o.flat(n, 1)];
    }
  }
  return out;
}

bool diagonal_is_normalized(const BlockMatrix& m) {
  for (std::size_t r = 0; r < m.m(); ++r)
    if (m.entries()(r, m.type().block_of(r)) != 1) return false;
  return true;
}

Vector ones(std::size_t n) { return Vector(n, Rational(1)); }

}  // namespace

std::string step_kind_name(StepKind kind) {
  for (const auto& [k, name] : kStepNames)
    if (k == kind) return name;
  throw std::logic_error("unknown step kind");
}

StepKind parse_step_kind(const std::string& name) {
  for (const auto& [k, n] : kStepNames)
    if (name == n) return k;
  throw InvalidInputError("unknown reduction step '" + name + "'");
}

void ReductionTrace::append(const ReductionTrace& other) {
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
}

GLCPSolution recover_step(const TraceStep& step, const GLCPSolution& sol) {
  check_shape(step.output_type, sol, step_kind_name(step.kind).c_str());
  switch (step.kind) {
    case StepKind::kHiddenKToK: return recover_hiddenk_to_k(step, sol);
    case StepKind::kKToHiddenK: return recover_k_to_hiddenk(step, sol);
    case StepKind::kPSplit: return recover_p_split(step, sol);
    case StepKind::kKSplit: return recover_k_split(step, sol);
    case StepKind::kRescale: return recover_rescale(step, sol);
  }
  throw std::logic_error("unknown step kind");
}

GLCPSolution recover(const ReductionTrace& trace, const GLCPSolution& sol) {
  GLCPSolution cur = sol;
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) cur = recover_step(*it, cur);
  return cur;
}

Basis solution_basis(const GLCPInstance& inst, const GLCPSolution& sol) {
  const BlockType& type = inst.m.type();
  check_shape(type, sol, "solution_basis");
  Basis basis(type.blocks());
  for (std::size_t j = 0; j < type.blocks(); ++j) {
    int pick = -1;
    for (int i = 0; i < type.size(j) && pick < 0; ++i)
      if (sgn(sol.w[type.flat(j, i)]) == 0) pick = i;
    if (pick < 0 && sgn(sol.z[j]) == 0) pick = type.size(j);
    if (pick < 0) throw InvalidInputError("solution violates complementarity in block " + std::to_string(j + 1));
    basis[j] = pick;
  }
  return basis;
}

Reduction hiddenk_to_k(const GLCPInstance& inst, const Matrix& x, const Vector& f_in) {
  inst.validate();
  const BlockType& b = inst.m.type();
  const std::size_t n = b.blocks();
  const Vector f = f_in.empty() ? ones(n) : f_in;
  if (f.size() != n) throw InvalidInputError("hiddenk_to_k: f has the wrong length");
  if (!all_positive(f)) throw PreconditionError("hiddenk_to_k: f must be positive");
  if (!verify_proper(inst.m, x)) throw PreconditionError("hiddenk_to_k: X is not a proper witness");

  const BlockMatrix big = inst.m.times(x).append_rows(x);
  const BlockType& g = big.type();
  const Vector mf = inst.m.entries() * f;
  Vector q(g.rows());
  for (std::size_t j = 0; j < n; ++j) {
    for (int i = 0; i < b.size(j); ++i) q[g.flat(j, i)] = inst.q[b.flat(j, i)] - mf[b.flat(j, i)];
    q[g.flat(j, b.size(j))] = -f[j];
  }
  TraceStep step;
  step.kind = StepKind::kHiddenKToK;
  step.input_type = b;
  step.output_type = g;
  step.f = f;
  Reduction out{GLCPInstance{big, std::move(q)}, {}};
  out.trace.steps.push_back(std::move(step));
  return out;
}

HiddenKReduction k_to_hiddenk(const GLCPInstance& inst, const Selector& c) {
  inst.validate();
  const BlockType& b = inst.m.type();
  const std::size_t n = b.blocks();
  check_selector(b, c);
  for (std::size_t j = 0; j < n; ++j) {
    if (b.size(j) < 2) throw PreconditionError("k_to_hiddenk: block " + std::to_string(j + 1) + " has a single row");
    if (sgn(inst.q[b.flat(j, c[j])]) > 0) throw PreconditionError("k_to_hiddenk: q_C must be nonpositive");
  }
  if (!is_k_matrix(inst.m)) throw PreconditionError("k_to_hiddenk: matrix is not a K-matrix");

  const Matrix mc = inst.m.representative(c);
  const auto mc_inv = inverse(mc);
  if (!mc_inv) throw std::logic_error("representative of a K-matrix is singular");
  Vector qc(n);
  std::vector<std::size_t> rest;
  for (std::size_t j = 0; j < n; ++j) {
    qc[j] = inst.q[b.flat(j, c[j])];
    for (int i = 0; i < b.size(j); ++i)
      if (i != c[j]) rest.push_back(b.flat(j, i));
  }
  std::vector<int> sizes = b.sizes();
  for (auto& x : sizes) --x;
  const BlockType r(sizes);
  const Matrix h = inst.m.entries().select_rows(rest) * *mc_inv;
  Vector q(rest.size());
  const Vector hqc = h * qc;
  for (std::size_t k = 0; k < rest.size(); ++k) q[k] = inst.q[rest[k]] - hqc[k];

  TraceStep step;
  step.kind = StepKind::kKToHiddenK;
  step.input_type = b;
  step.output_type = r;
  step.c = c;
  step.mc_inverse = *mc_inv;
  step.qc = qc;
  HiddenKReduction out{GLCPInstance{BlockMatrix(r, h), std::move(q)}, mc, {}};
  out.trace.steps.push_back(std::move(step));
  return out;
}

std::optional<Selector> nonpositive_representative(const GLCPInstance& inst) {
  const BlockType& b = inst.m.type();
  Selector c(b.blocks(), -1);
  for (std::size_t j = 0; j < b.blocks(); ++j) {
    for (int i = b.size(j) - 1; i >= 0 && c[j] < 0; --i)
      if (sgn(inst.q[b.flat(j, i)]) <= 0) c[j] = i;
    if (c[j] < 0) return std::nullopt;
  }
  return c;
}

Reduction rescale(const GLCPInstance& inst, const DiagonalScaling& scaling) {
  inst.validate();
  const BlockType& b = inst.m.type();
  if (scaling.left.size() != b.rows() || scaling.right.size() != b.blocks())
    throw InvalidInputError("rescale: scaling does not match the instance");
  if (!all_positive(scaling.left) || !all_positive(scaling.right))
    throw PreconditionError("rescale: scaling factors must be positive");
  Matrix m = inst.m.entries();
  Vector q = inst.q;
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t k = 0; k < b.blocks(); ++k) m(r, k) *= scaling.left[r] * scaling.right[k];
    q[r] *= scaling.left[r];
  }
  TraceStep step;
  step.kind = StepKind::kRescale;
  step.input_type = b;
  step.output_type = b;
  step.scaling = scaling;
  Reduction out{GLCPInstance{BlockMatrix(b, std::move(m)), std::move(q)}, {}};
  out.trace.steps.push_back(std::move(step));
  return out;
}

Reduction normalize_diagonal(const GLCPInstance& inst) {
  inst.validate();
  const BlockType& b = inst.m.type();
  DiagonalScaling sc{Vector(b.rows()), ones(b.blocks())};
  for (std::size_t r = 0; r < b.rows(); ++r) {
    const Rational& d = inst.m.entries()(r, b.block_of(r));
    if (sgn(d) <= 0) throw PreconditionError("normalize_diagonal: nonpositive diagonal entry in row " + std::to_string(r + 1));
    sc.left[r] = 1 / d;
  }
  return rescale(inst, sc);
}

Reduction pglcp_split_step(const GLCPInstance& inst, std::size_t j) {
  inst.validate();
  const BlockType& b = inst.m.type();
  const std::size_t n = b.blocks();
  if (j >= n) throw InvalidInputError("pglcp_split_step: block out of range");
  if (b.size(j) < 2) throw PreconditionError("pglcp_split_step: block has a single row, nothing to split");
  if (!diagonal_is_normalized(inst.m)) throw PreconditionError("pglcp_split_step: diagonal must be normalized to 1");

  const int row = b.size(j) - 1;
  std::vector<int> sizes = shrunk_sizes(b, j);
  sizes.push_back(1);
  sizes.push_back(1);
  const BlockType o(sizes);
  const Matrix& m = inst.m.entries();
  Matrix e(o.rows(), n + 2);
  Vector q(o.rows());

  for (std::size_t k = 0; k < n; ++k) {
    for (int i = 0; i < b.size(k); ++i) {
      if (k == j && i == row) continue;
      const std::size_t src = b.flat(k, i);
      const std::size_t dst = o.flat(k, k == j ? index_after_removal(i, row) : i);
      for (std::size_t c = 0; c < n; ++c) e(dst, c) = m(src, c);
      if (k != j) e(dst, n + 1) = m(src, j);
      q[dst] = inst.q[src];
    }
  }
  const std::size_t split = b.flat(j, row);
  for (std::size_t c = 0; c < n; ++c)
    if (c != j) e(o.flat(n, 0), c) = m(split, c);
  e(o.flat(n, 0), n) = 1;
  q[o.flat(n, 0)] = inst.q[split];
  e(o.flat(n + 1, 0), j) = 1;
  e(o.flat(n + 1, 0), n) = -1;
  e(o.flat(n + 1, 0), n + 1) = 1;

  TraceStep step;
  step.kind = StepKind::kPSplit;
  step.input_type = b;
  step.output_type = o;
  step.block = j;
  step.row = row;
  Reduction out{GLCPInstance{BlockMatrix(o, std::move(e)), std::move(q)}, {}};
  out.trace.steps.push_back(std::move(step));
  return out;
}

Reduction pglcp_to_plcp(const GLCPInstance& inst) {
  inst.validate();
  if (inst.m.type().is_all_ones()) return Reduction{inst, {}};
  Reduction out = normalize_diagonal(inst);
  const std::size_t n = inst.m.n();
  for (std::size_t j = 0; j < n; ++j) {
    while (out.inst.m.type().size(j) > 1) {
      Reduction step = pglcp_split_step(out.inst, j);
      out.inst = std::move(step.inst);
      out.trace.append(step.trace);
    }
  }
  return out;
}

int kglcp_split_row(const GLCPInstance& inst, std::size_t j, bool rhs_order) {
  const BlockType& b = inst.m.type();
  if (rhs_order)
    for (int i = b.size(j) - 1; i >= 0; --i)
      if (sgn(inst.q[b.flat(j, i)]) > 0) return i;
  return b.size(j) - 1;
}

Reduction kglcp_split_step(const GLCPInstance& inst, std::size_t j, int row) {
  inst.validate();
  const BlockType& b = inst.m.type();
  const std::size_t n = b.blocks();
  if (j >= n) throw InvalidInputError("kglcp_split_step: block out of range");
  if (b.size(j) < 2) throw PreconditionError("kglcp_split_step: block has a single row, nothing to split");
  if (row < 0 || row >= b.size(j)) throw InvalidInputError("kglcp_split_step: row out of range");
  const StochasticKCheck check = as_stochastic_k(inst.m);
  if (!check) throw PreconditionError("kglcp_split_step: matrix is not stochastic-K (" + check.reason + ")");
  const Rational& gamma = check.form->gamma;

  std::vector<int> sizes = shrunk_sizes(b, j);
  sizes.push_back(2);
  const BlockType o(sizes);
  const Matrix& m = inst.m.entries();
  Matrix e(o.rows(), n + 1);
  Vector q(o.rows());
  DiagonalScaling sc{Vector(o.rows(), Rational(1, 2)), ones(n + 1)};
  sc.right[j] = (1 + gamma) / 2;

  for (std::size_t k = 0; k < n; ++k) {
    for (int i = 0; i < b.size(k); ++i) {
      if (k == j && i == row) continue;
      const std::size_t src = b.flat(k, i);
      const std::size_t dst = o.flat(k, k == j ? index_after_removal(i, row) : i);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) e(dst, c) = m(src, c);
      if (k == j) {
        e(dst, j) = 1;
        e(dst, n) = m(src, j) - 1;
        sc.left[dst] = 1;
      } else {
        e(dst, n) = m(src, j);
      }
      q[dst] = inst.q[src];
    }
  }
  const std::size_t split = b.flat(j, row);
  for (std::size_t c = 0; c < n; ++c)
    if (c != j) e(o.flat(n, 0), c) = m(split, c);
  e(o.flat(n, 0), n) = m(split, j);
  q[o.flat(n, 0)] = inst.q[split];
  e(o.flat(n, 1), j) = -1;
  e(o.flat(n, 1), n) = 1;
  sc.left[o.flat(n, 1)] = 1;

  TraceStep step;
  step.kind = StepKind::kKSplit;
  step.input_type = b;
  step.output_type = o;
  step.block = j;
  step.row = row;
  Reduction out = rescale(GLCPInstance{BlockMatrix(o, std::move(e)), std::move(q)}, sc);
  out.trace.steps.insert(out.trace.steps.begin(), std::move(step));
  return out;
}

Reduction kglcp_to_binary(const GLCPInstance& inst, bool rhs_order) {
  inst.validate();
  const StochasticKCheck check = as_stochastic_k(inst.m);
  if (!check) throw PreconditionError("kglcp_to_binary: matrix is not stochastic-K (" + check.reason + ")");
  Reduction out{inst, {}};
  const std::size_t n = inst.m.n();
  for (std::size_t j = 0; j < n; ++j) {
    while (out.inst.m.type().size(j) > 2) {
      Reduction step = kglcp_split_step(out.inst, j, kglcp_split_row(out.inst, j, rhs_order));
      out.inst = std::move(step.inst);
      out.trace.append(step.trace);
    }
  }
  return out;
}

HiddenKReduction hiddenk_glcp_to_hiddenk_lcp(const GLCPInstance& inst, const Matrix& x) {
  Reduction cur = hiddenk_to_k(inst, x);
  const ScaledStochasticForm sf = stochastic_form(cur.inst.m, ones(inst.m.n()));
  Reduction scaled = rescale(cur.inst, sf.scaling);
  cur.trace.append(scaled.trace);
  Reduction binary = kglcp_to_binary(scaled.inst, true);
  cur.trace.append(binary.trace);
  const auto c = nonpositive_representative(binary.inst);
  if (!c) throw std::logic_error("binary split lost the nonpositive representative");
  HiddenKReduction out = k_to_hiddenk(binary.inst, *c);
  ReductionTrace full = cur.trace;
  full.append(out.trace);
  out.trace = std::move(full);
  return out;
}

CubeLpReduction grid_lp_to_cube_lp(const GridLP& lp, const std::optional<Matrix>& x) {
  lp.validate();
  const GLCPInstance inst = glcp_from_grid_lp(lp);
  std::optional<Matrix> witness = x;
  if (!witness) witness = is_hidden_k(inst.m);
  if (!witness) throw PreconditionError("grid_lp_to_cube_lp: constraint matrix is not hidden K");
  HiddenKReduction red = hiddenk_glcp_to_hiddenk_lcp(inst, *witness);
  CubeLpReduction out;
  out.cube = dual_lp_from_glcp(red.inst, red.witness, ones(red.inst.m.n()));
  out.witness = std::move(red.witness);
  out.trace = std::move(red.trace);
  return out;
}

Basis recover_grid_lp_basis(const GridLP& lp, const CubeLpReduction& red, const Basis& cube_basis) {
  const GLCPInstance final_inst{red.cube.m, red.cube.q};
  check_selector(final_inst.m.type().grown(), cube_basis);
  const auto sol = basic_solution(final_inst, cube_basis);
  if (!sol || !verify_solution(final_inst, *sol))
    throw InvalidInputError("recover: basis is not optimal for the reduced LP");
  return solution_basis(GLCPInstance{lp.m, lp.q}, recover(red.trace, *sol));
}

BinaryMdpReduction mdp_to_binary_mdp(const DiscountedMDP& mdp) {
  mdp.validate();
  BinaryMdpReduction out;
  out.offset = default_offset(mdp);
  const Reduction bin = kglcp_to_binary(mdp_to_kglcp(mdp, out.offset), true);
  out.trace = bin.trace;
  out.mdp = bin.trace.steps.empty() ? mdp : kglcp_to_mdp(bin.inst).mdp;
  return out;
}

Vector recover_mdp_values(const DiscountedMDP& original, const BinaryMdpReduction& red, const Vector& v) {
  const DiscountedMDP& b = red.mdp;
  if (v.size() != b.states()) throw InvalidInputError("recover: value vector has the wrong length");
  if (red.trace.steps.empty()) return v;
  // K-GLCP(E - gamma P, -r) is solved by z = v when r >= 0.
  GLCPSolution sol{StochasticKForm{b.gamma, b.p}.matrix().entries() * v - b.r, v};
  return mdp_value_from_glcp(original, red.offset, recover(red.trace, sol).z);
}

}  // namespace gridcube
