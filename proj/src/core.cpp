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

#include "gridcube/core.hpp"

#include <atomic>
#include <limits>
#include <stdexcept>

#include "gridcube/config.hpp"
#include "gridcube/errors.hpp"
#include "gridcube/exactlp.hpp"

namespace gridcube {

BlockMatrix StochasticKForm::matrix() const {
  const BlockType& type = p.type();
  Matrix e = BlockMatrix::identity_pattern(type).entries();
  return BlockMatrix(type, e - gamma * p.entries());
}

BlockMatrix uniform_stochastic(const BlockType& type) {
  Matrix u(type.rows(), type.blocks());
  const Rational w(1, static_cast<unsigned long>(type.blocks()));
  for (std::size_t r = 0; r < type.rows(); ++r)
    for (std::size_t k = 0; k < type.blocks(); ++k) u(r, k) = w;
  return BlockMatrix(type, std::move(u));
}

Matrix representative_submatrix(const BlockMatrix& m, const Selector& sel) {
  return m.representative(sel);
}

namespace {

// Digit b_j in block j means "column j is not in the principal subset".
std::vector<int> partial_selection(const BlockType& type, std::uint64_t rank) {
  std::vector<int> picks(type.blocks());
  for (std::size_t j = 0; j < type.blocks(); ++j) {
    const auto radix = static_cast<std::uint64_t>(type.size(j) + 1);
    const int digit = static_cast<int>(rank % radix);
    rank /= radix;
    picks[j] = digit == type.size(j) ? -1 : digit;
  }
  return picks;
}

Rational partial_minor(const BlockMatrix& m, const std::vector<int>& picks) {
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < picks.size(); ++j)
    if (picks[j] >= 0) cols.push_back(j);
  Matrix sub(cols.size(), cols.size());
  for (std::size_t a = 0; a < cols.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) sub(a, b) = m(cols[a], picks[cols[a]], cols[b]);
  return determinant(sub);
}

std::uint64_t partial_selection_count(const BlockType& type) {
  std::uint64_t count = 1;
  for (int s : type.sizes()) {
    const auto radix = static_cast<std::uint64_t>(s + 1);
    if (count > std::numeric_limits<std::uint64_t>::max() / radix) return std::numeric_limits<std::uint64_t>::max();
    count *= radix;
  }
  return count;
}

}  // namespace

std::optional<MinorViolation> find_nonpositive_minor(const BlockMatrix& m, Exec exec) {
  const BlockType& type = m.type();
  const std::uint64_t total = partial_selection_count(type);
  check_cap(total - 1, enumeration_cap(), "principal minors");
  constexpr auto kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> first{kNone};
  // The all-excluded selection has the largest rank and is skipped.
  for_each_index(total - 1, exec, [&](std::uint64_t rank) {
    if (rank > first.load(std::memory_order_relaxed)) return;
    if (sgn(partial_minor(m, partial_selection(type, rank))) > 0) return;
    std::uint64_t seen = first.load();
    while (rank < seen && !first.compare_exchange_weak(seen, rank)) {
    }
  });
  if (first.load() == kNone) return std::nullopt;
  MinorViolation v;
  v.picks = partial_selection(type, first.load());
  v.minor = partial_minor(m, v.picks);
  return v;
}

bool is_p_matrix(const BlockMatrix& m, Exec exec) {
  return !find_nonpositive_minor(m, exec).has_value();
}

bool is_z_matrix(const BlockMatrix& m) {
  const BlockType& type = m.type();
  for (std::size_t r = 0; r < type.rows(); ++r) {
    const std::size_t own = type.block_of(r);
    for (std::size_t k = 0; k < type.blocks(); ++k)
      if (k != own && sgn(m.entries()(r, k)) > 0) return false;
  }
  return true;
}

std::optional<Vector> k_certificate(const BlockMatrix& m) {
  if (!is_z_matrix(m)) return std::nullopt;
  Vector ones(m.n(), Rational(1));
  if (all_positive(m.entries() * ones)) return ones;
  return lp::strict_feasibility(m.entries());
}

bool is_k_matrix(const BlockMatrix& m) { return k_certificate(m).has_value(); }

StochasticKCheck as_stochastic_k(const BlockMatrix& m) {
  const BlockType& type = m.type();
  const Matrix d = BlockMatrix::identity_pattern(type).entries() - m.entries();
  StochasticKCheck check;
  std::optional<Rational> gamma;
  for (std::size_t r = 0; r < type.rows(); ++r) {
    Rational sum = 0;
    for (std::size_t k = 0; k < type.blocks(); ++k) {
      if (sgn(d(r, k)) < 0) {
        check.violating_row = r;
        check.reason = "E(b) - M has a negative entry";
        return check;
      }
      sum += d(r, k);
    }
    if (!gamma) {
      gamma = sum;
    } else if (*gamma != sum) {
      check.violating_row = r;
      check.reason = "row sums of E(b) - M differ";
      return check;
    }
  }
  if (!gamma) gamma = Rational(0);
  if (*gamma >= 1) {
    check.violating_row = 0;
    check.reason = "factor is not below 1";
    return check;
  }
  StochasticKForm form;
  form.gamma = *gamma;
  form.p = sgn(*gamma) == 0 ? uniform_stochastic(type)
                            : BlockMatrix(type, (1 / *gamma) * d);
  check.form = std::move(form);
  return check;
}

ScaledStochasticForm stochastic_form(const BlockMatrix& m, const Vector& x) {
  const BlockType& type = m.type();
  if (x.size() != type.blocks()) throw InvalidInputError("stochastic_form: certificate has the wrong length");
  if (!is_z_matrix(m)) throw PreconditionError("stochastic_form: matrix is not a Z-matrix");
  const Vector mx = m.entries() * x;
  if (!all_positive(x) || !all_positive(mx))
    throw PreconditionError("stochastic_form: invalid certificate, need x > 0 and Mx > 0");

  // Equalize all row sums to 1, then divide by the largest diagonal entry.
  Vector left(type.rows());
  for (std::size_t r = 0; r < type.rows(); ++r) left[r] = 1 / mx[r];
  Rational t = 0;
  for (std::size_t r = 0; r < type.rows(); ++r) {
    Rational diag = left[r] * m.entries()(r, type.block_of(r)) * x[type.block_of(r)];
    if (diag > t) t = diag;
  }
  for (auto& l : left) l /= t;

  ScaledStochasticForm out;
  out.scaling = DiagonalScaling{left, x};
  const BlockMatrix lmh = scale(m, out.scaling);
  StochasticKCheck check = as_stochastic_k(lmh);
  if (!check) throw std::logic_error("stochastic_form produced a matrix that is not stochastic-K");
  out.form = std::move(*check.form);
  return out;
}

BlockMatrix scale(const BlockMatrix& m, const DiagonalScaling& sc) {
  const BlockType& type = m.type();
  if (sc.left.size() != type.rows() || sc.right.size() != type.blocks())
    throw InvalidInputError("scale: factor vector sizes do not match the matrix");
  if (!all_positive(sc.left) || !all_positive(sc.right))
    throw PreconditionError("scale: scaling factors must be positive");
  Matrix e = m.entries();
  for (std::size_t r = 0; r < type.rows(); ++r)
    for (std::size_t k = 0; k < type.blocks(); ++k) e(r, k) *= sc.left[r] * sc.right[k];
  return BlockMatrix(type, std::move(e));
}

void check_signature(const SignatureVector& s, std::size_t n) {
  if (s.size() != n) throw InvalidInputError("signature has the wrong length");
  for (int v : s)
    if (v != 1 && v != -1) throw InvalidInputError("signature entries must be +1 or -1");
}

BlockMatrix signed_conjugate(const BlockMatrix& m, const SignatureVector& s) {
  const BlockType& type = m.type();
  check_signature(s, type.blocks());
  Matrix e = m.entries();
  for (std::size_t r = 0; r < type.rows(); ++r)
    for (std::size_t k = 0; k < type.blocks(); ++k)
      if (s[type.block_of(r)] * s[k] < 0) e(r, k) = -e(r, k);
  return BlockMatrix(type, std::move(e));
}

Vector signed_rhs(const BlockType& type, const Vector& q, const SignatureVector& s) {
  check_signature(s, type.blocks());
  if (q.size() != type.rows()) throw InvalidInputError("right-hand side has the wrong length");
  Vector out = q;
  for (std::size_t r = 0; r < type.rows(); ++r)
    if (s[type.block_of(r)] < 0) out[r] = -out[r];
  return out;
}

}  // namespace gridcube
