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

#include "gridcube/exactlp.hpp"

#include <stdexcept>
#include <utility>

#include "gridcube/errors.hpp"

namespace gridcube::lp {

void LinearProgram::add_row(Vector coeffs, Sense sense, Rational rhs) {
  if (a.rows() == 0 && a.cols() == 0) a = Matrix(0, coeffs.size());
  if (coeffs.size() != a.cols()) throw InvalidInputError("add_row: wrong number of coefficients");
  Matrix grown(a.rows() + 1, a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) grown(i, j) = std::move(a(i, j));
  for (std::size_t j = 0; j < coeffs.size(); ++j) grown(a.rows(), j) = std::move(coeffs[j]);
  a = std::move(grown);
  b.push_back(std::move(rhs));
  senses.push_back(sense);
}

namespace {

enum class ColKind { kPositive, kNegative, kSlack, kArtificial };

struct Column {
  ColKind kind;
  std::size_t index;  // original variable or row
};

class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : lp_(lp), m_(lp.rows()) {
    flipped_.assign(m_, false);
    for (std::size_t j = 0; j < lp.cols(); ++j) {
      cols_.push_back({ColKind::kPositive, j});
      if (lp.is_free(j)) cols_.push_back({ColKind::kNegative, j});
    }
    std::vector<Sense> senses(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      senses[i] = lp.senses[i];
      if (sgn(lp.b[i]) < 0) {
        flipped_[i] = true;
        if (senses[i] == Sense::kLessEqual) senses[i] = Sense::kGreaterEqual;
        else if (senses[i] == Sense::kGreaterEqual) senses[i] = Sense::kLessEqual;
      }
    }
    std::vector<std::size_t> slack_col(m_, kNone), art_col(m_, kNone);
    for (std::size_t i = 0; i < m_; ++i) {
      if (senses[i] != Sense::kEqual) {
        slack_col[i] = cols_.size();
        cols_.push_back({ColKind::kSlack, i});
      }
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (senses[i] != Sense::kLessEqual) {
        art_col[i] = cols_.size();
        cols_.push_back({ColKind::kArtificial, i});
      }
    }
    ncols_ = cols_.size();
    t_ = Matrix(m_, ncols_ + 1);
    basis_.assign(m_, kNone);
    init_col_.assign(m_, kNone);
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational s = flipped_[i] ? Rational(-1) : Rational(1);
      for (std::size_t c = 0; c < ncols_; ++c) {
        const Column& col = cols_[c];
        if (col.kind == ColKind::kPositive) t_(i, c) = s * lp.a(i, col.index);
        else if (col.kind == ColKind::kNegative) t_(i, c) = -s * lp.a(i, col.index);
      }
      t_(i, ncols_) = s * lp.b[i];
      if (slack_col[i] != kNone) t_(i, slack_col[i]) = senses[i] == Sense::kLessEqual ? 1 : -1;
      if (art_col[i] != kNone) t_(i, art_col[i]) = 1;
      basis_[i] = senses[i] == Sense::kLessEqual ? slack_col[i] : art_col[i];
      init_col_[i] = basis_[i];
    }
  }

  bool has_artificials() const {
    for (const auto& c : cols_)
      if (c.kind == ColKind::kArtificial) return true;
    return false;
  }

  /// Returns kNone when optimal, otherwise the entering column of an
  /// unbounded direction.
  std::size_t run(const Vector& cost, bool allow_artificial) {
    price(cost);
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t c = 0; c < ncols_; ++c) {
        if (!allow_artificial && cols_[c].kind == ColKind::kArtificial) continue;
        if (sgn(z_[c]) < 0) {
          enter = c;
          break;
        }
      }
      if (enter == kNone) return kNone;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(t_(i, enter)) <= 0) continue;
        Rational ratio = t_(i, ncols_) / t_(i, enter);
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return enter;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    const Rational inv = 1 / t_(r, e);
    for (std::size_t c = 0; c <= ncols_; ++c) t_(r, c) *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || sgn(t_(i, e)) == 0) continue;
      const Rational f = t_(i, e);
      for (std::size_t c = 0; c <= ncols_; ++c)
        if (sgn(t_(r, c)) != 0) t_(i, c) -= f * t_(r, c);
    }
    if (!z_.empty() && sgn(z_[e]) != 0) {
      const Rational f = z_[e];
      for (std::size_t c = 0; c <= ncols_; ++c)
        if (sgn(t_(r, c)) != 0) z_[c] -= f * t_(r, c);
    }
    basis_[r] = e;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (cols_[basis_[i]].kind != ColKind::kArtificial) continue;
      for (std::size_t c = 0; c < ncols_; ++c) {
        if (cols_[c].kind == ColKind::kArtificial) continue;
        if (sgn(t_(i, c)) != 0) {
          pivot(i, c);
          break;
        }
      }
      // A row that keeps its artificial is redundant; its entries outside
      // artificial columns are zero, so the ratio test never selects it.
    }
  }

  Vector phase1_cost() const {
    Vector cost(ncols_);
    for (std::size_t c = 0; c < ncols_; ++c)
      if (cols_[c].kind == ColKind::kArtificial) cost[c] = 1;
    return cost;
  }

  Vector phase2_cost() const {
    Vector cost(ncols_);
    for (std::size_t c = 0; c < ncols_; ++c) {
      const Column& col = cols_[c];
      Rational v = 0;
      if (col.kind == ColKind::kPositive) v = lp_.c[col.index];
      else if (col.kind == ColKind::kNegative) v = -lp_.c[col.index];
      cost[c] = lp_.maximize ? -v : v;
    }
    return cost;
  }

  Rational objective() const { return -z_[ncols_]; }

  Vector farkas(const Vector& cost) const {
    Vector y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      Rational pi = cost[init_col_[i]] - z_[init_col_[i]];
      y[i] = flipped_[i] ? -pi : pi;
    }
    return y;
  }

  Vector primal() const {
    Vector internal(ncols_);
    for (std::size_t i = 0; i < m_; ++i) internal[basis_[i]] = t_(i, ncols_);
    return to_original(internal);
  }

  Vector ray(std::size_t enter) const {
    Vector internal(ncols_);
    internal[enter] = 1;
    for (std::size_t i = 0; i < m_; ++i) internal[basis_[i]] = -t_(i, enter);
    return to_original(internal);
  }

  const std::vector<std::size_t>& basis() const { return basis_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void price(const Vector& cost) {
    z_.assign(ncols_ + 1, Rational(0));
    for (std::size_t c = 0; c < ncols_; ++c) z_[c] = cost[c];
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t c = 0; c <= ncols_; ++c) z_[c] -= cb * t_(i, c);
    }
  }

  Vector to_original(const Vector& internal) const {
    Vector x(lp_.cols());
    for (std::size_t c = 0; c < ncols_; ++c) {
      if (cols_[c].kind == ColKind::kPositive) x[cols_[c].index] += internal[c];
      else if (cols_[c].kind == ColKind::kNegative) x[cols_[c].index] -= internal[c];
    }
    return x;
  }

  const LinearProgram& lp_;
  std::size_t m_;
  std::size_t ncols_ = 0;
  std::vector<Column> cols_;
  std::vector<bool> flipped_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> init_col_;
  Matrix t_;
  Vector z_;
};

void validate(const LinearProgram& lp) {
  if (lp.b.size() != lp.rows() || lp.senses.size() != lp.rows())
    throw InvalidInputError("linear program: row data mismatch");
  if (lp.c.size() != lp.cols()) throw InvalidInputError("linear program: objective size mismatch");
  if (!lp.free.empty() && lp.free.size() != lp.cols())
    throw InvalidInputError("linear program: bound flags size mismatch");
}

bool row_ok(Sense sense, const Rational& lhs, const Rational& rhs) {
  switch (sense) {
    case Sense::kLessEqual: return lhs <= rhs;
    case Sense::kEqual: return lhs == rhs;
    case Sense::kGreaterEqual: return lhs >= rhs;
  }
  return false;
}

}  // namespace

LPOutcome solve(const LinearProgram& lp) {
  validate(lp);
  Tableau tab(lp);
  LPOutcome out;
  if (tab.has_artificials()) {
    const Vector cost = tab.phase1_cost();
    tab.run(cost, true);
    if (sgn(tab.objective()) > 0) {
      out.status = Status::kInfeasible;
      out.farkas = tab.farkas(cost);
      return out;
    }
    tab.drive_out_artificials();
  }
  const Vector cost = tab.phase2_cost();
  const std::size_t enter = tab.run(cost, false);
  if (enter != static_cast<std::size_t>(-1)) {
    out.status = Status::kUnbounded;
    out.ray = tab.ray(enter);
    out.x = tab.primal();
    return out;
  }
  out.status = Status::kOptimal;
  out.x = tab.primal();
  out.value = dot(lp.c, out.x);
  out.basis = tab.basis();
  return out;
}

bool is_feasible_point(const LinearProgram& lp, const Vector& x) {
  if (x.size() != lp.cols()) return false;
  for (std::size_t j = 0; j < lp.cols(); ++j)
    if (!lp.is_free(j) && sgn(x[j]) < 0) return false;
  for (std::size_t i = 0; i < lp.rows(); ++i)
    if (!row_ok(lp.senses[i], dot(lp.a.row(i), x), lp.b[i])) return false;
  return true;
}

bool verify_farkas(const LinearProgram& lp, const Vector& y) {
  if (y.size() != lp.rows()) return false;
  for (std::size_t i = 0; i < lp.rows(); ++i) {
    if (lp.senses[i] == Sense::kLessEqual && sgn(y[i]) > 0) return false;
    if (lp.senses[i] == Sense::kGreaterEqual && sgn(y[i]) < 0) return false;
  }
  const Vector aty = lp.a.transpose() * y;
  for (std::size_t j = 0; j < lp.cols(); ++j) {
    if (lp.is_free(j) ? sgn(aty[j]) != 0 : sgn(aty[j]) > 0) return false;
  }
  return sgn(dot(lp.b, y)) > 0;
}

bool verify_ray(const LinearProgram& lp, const Vector& d) {
  if (d.size() != lp.cols()) return false;
  for (std::size_t j = 0; j < lp.cols(); ++j)
    if (!lp.is_free(j) && sgn(d[j]) < 0) return false;
  for (std::size_t i = 0; i < lp.rows(); ++i)
    if (!row_ok(lp.senses[i], dot(lp.a.row(i), d), Rational(0))) return false;
  const int gain = sgn(dot(lp.c, d));
  return lp.maximize ? gain > 0 : gain < 0;
}

std::optional<Vector> strict_feasibility(const Matrix& a) {
  const std::size_t n = a.cols();
  LinearProgram lp;
  lp.a = Matrix(0, n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Vector row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = a(i, j);
    row[n] = -1;
    lp.add_row(std::move(row), Sense::kGreaterEqual, 0);
  }
  for (std::size_t j = 0; j < n; ++j) {
    Vector row(n + 1);
    row[j] = 1;
    row[n] = -1;
    lp.add_row(std::move(row), Sense::kGreaterEqual, 0);
  }
  Vector cap(n + 1);
  cap[n] = 1;
  lp.add_row(std::move(cap), Sense::kLessEqual, 1);
  lp.c.assign(n + 1, Rational(0));
  lp.c[n] = 1;
  lp.free.assign(n + 1, false);
  lp.free[n] = true;
  lp.maximize = true;

  const LPOutcome out = solve(lp);
  if (out.status != Status::kOptimal) throw std::logic_error("strict feasibility LP must be bounded and feasible");
  if (sgn(out.value) <= 0) return std::nullopt;
  Vector x(out.x.begin(), out.x.begin() + static_cast<std::ptrdiff_t>(n));
  if (!all_positive(x) || !all_positive(a * x)) throw std::logic_error("strict feasibility certificate failed re-check");
  return x;
}

}  // namespace gridcube::lp
