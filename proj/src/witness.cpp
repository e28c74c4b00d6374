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

#include "gridcube/witness.hpp"

#include <stdexcept>

#include "gridcube/errors.hpp"
#include "gridcube/exactlp.hpp"

namespace gridcube {

bool is_square_z(const Matrix& x) {
  if (!x.square()) return false;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k)
      if (i != k && sgn(x(i, k)) > 0) return false;
  return true;
}

bool verify_hidden_z(const BlockMatrix& m, const HiddenZWitness& w) {
  const std::size_t n = m.n();
  if (w.x.rows() != n || w.x.cols() != n || w.r.size() != n || w.s.size() != m.m() ||
      !(w.y.type() == m.type())) {
    throw InvalidInputError("hidden Z witness dimensions do not match the matrix");
  }
  if (!is_square_z(w.x) || !is_z_matrix(w.y)) return false;
  if (m.entries() * w.x != w.y.entries()) return false;
  if (!all_nonnegative(w.r) || !all_nonnegative(w.s)) return false;
  return all_positive(w.x.transpose() * w.r + w.y.entries().transpose() * w.s);
}

bool verify_proper(const BlockMatrix& m, const Matrix& x) {
  if (x.rows() != m.n() || x.cols() != m.n())
    throw InvalidInputError("witness X must be square of order n");
  if (!is_square_z(x)) return false;
  const BlockMatrix y = m.times(x);
  if (!is_z_matrix(y)) return false;
  return all_positive(y.entries().row_sums()) && all_positive(x.row_sums());
}

HiddenZWitness rescale_witness(const HiddenZWitness& w, const Vector& d) {
  if (d.size() != w.x.cols()) throw InvalidInputError("rescale_witness: d has the wrong length");
  if (!all_positive(d)) throw PreconditionError("rescale_witness: d must be positive");
  const Matrix dm = Matrix::diagonal(d);
  return HiddenZWitness{w.x * dm, w.y.times(dm), w.r, w.s};
}

std::optional<MinFactorWitness> compute_min_factor_witness(const BlockMatrix& m) {
  const BlockType& type = m.type();
  const std::size_t n = type.blocks();
  const std::size_t nv = n * n + 1;  // X row-major, then gamma
  const std::size_t g = n * n;
  auto xvar = [n](std::size_t j, std::size_t k) { return j * n + k; };

  lp::LinearProgram lp;
  lp.a = Matrix(0, nv);
  // (MX)_{rho,k} <= [k == block(rho)] and row sums of MX >= 1 - gamma.
  for (std::size_t r = 0; r < type.rows(); ++r) {
    Vector sum_row(nv);
    for (std::size_t k = 0; k < n; ++k) {
      Vector row(nv);
      for (std::size_t j = 0; j < n; ++j) {
        row[xvar(j, k)] = m.entries()(r, j);
        sum_row[xvar(j, k)] += m.entries()(r, j);
      }
      lp.add_row(std::move(row), lp::Sense::kLessEqual, k == type.block_of(r) ? 1 : 0);
    }
    sum_row[g] = 1;
    lp.add_row(std::move(sum_row), lp::Sense::kGreaterEqual, 1);
  }
  for (std::size_t j = 0; j < n; ++j) {
    Vector sum_row(nv);
    for (std::size_t k = 0; k < n; ++k) {
      Vector row(nv);
      row[xvar(j, k)] = 1;
      sum_row[xvar(j, k)] = 1;
      lp.add_row(std::move(row), lp::Sense::kLessEqual, k == j ? 1 : 0);
    }
    sum_row[g] = 1;
    lp.add_row(std::move(sum_row), lp::Sense::kGreaterEqual, 1);
  }
  lp.c.assign(nv, Rational(0));
  lp.c[g] = 1;
  lp.free.assign(nv, true);

  const lp::LPOutcome out = lp::solve(lp);
  if (out.status != lp::Status::kOptimal) throw std::logic_error("min-factor witness LP must have an optimum");
  if (out.value >= 1) return std::nullopt;
  MinFactorWitness w;
  w.gamma = out.value;
  w.x = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) w.x(j, k) = out.x[xvar(j, k)];
  if (!verify_proper(m, w.x)) throw std::logic_error("min-factor witness failed re-check");
  return w;
}

WitnessStochasticForm witness_stochastic_form(const BlockMatrix& m, const Matrix& x) {
  if (!verify_proper(m, x)) throw PreconditionError("witness_stochastic_form: X is not a proper witness");
  const BlockType& type = m.type();
  const std::size_t n = type.blocks();
  const BlockMatrix combined = m.times(x).append_rows(x);
  const ScaledStochasticForm sf = stochastic_form(combined, constant_vector(n, 1));
  const BlockType& grown = combined.type();

  WitnessStochasticForm out;
  out.scaling.left.resize(type.rows());
  out.scaling.right.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (int i = 0; i < type.size(j); ++i) out.scaling.left[type.flat(j, i)] = sf.scaling.left[grown.flat(j, i)];
    out.scaling.right[j] = 1 / sf.scaling.left[grown.flat(j, type.size(j))];
  }
  out.form = sf.form;
  return out;
}

std::optional<Matrix> is_hidden_k(const BlockMatrix& m) {
  auto w = compute_min_factor_witness(m);
  if (!w) return std::nullopt;
  if (!is_k_matrix(m.times(w->x).append_rows(w->x)))
    throw std::logic_error("hidden K witness does not give a K-matrix [MX|X]");
  return w->x;
}

}  // namespace gridcube
