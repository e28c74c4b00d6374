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

#ifndef GRIDCUBE_EXACTLP_HPP
#define GRIDCUBE_EXACTLP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gridcube/matrix.hpp"
#include "gridcube/rational.hpp"

namespace gridcube::lp {

enum class Sense { kLessEqual, kEqual, kGreaterEqual };
enum class Status { kOptimal, kInfeasible, kUnbounded };

/// opt c^T x  s.t.  a_i^T x (sense_i) b_i,  x_j >= 0 unless free[j].
struct LinearProgram {
  Matrix a;
  Vector b;
  std::vector<Sense> senses;
  Vector c;
  std::vector<bool> free;  // empty means "all nonnegative"
  bool maximize = false;

  std::size_t rows() const { return a.rows(); }
  std::size_t cols() const { return a.cols(); }
  bool is_free(std::size_t j) const { return !free.empty() && free[j]; }

  /// Appends one constraint row.
  void add_row(Vector coeffs, Sense sense, Rational rhs);
};

struct LPOutcome {
  Status status = Status::kInfeasible;
  Rational value;
  Vector x;
  /// Internal tableau columns that are basic at the optimum.
  std::vector<std::size_t> basis;
  /// Farkas multipliers (one per row) when infeasible: y_i <= 0 on <= rows,
  /// y_i >= 0 on >= rows, A^T y <= 0 on nonnegative variables, = 0 on free
  /// ones, and b^T y > 0.
  Vector farkas;
  /// Improving direction when unbounded.
  Vector ray;
};

/// Two-phase dense tableau simplex with Bland's least-index rule.
LPOutcome solve(const LinearProgram& lp);

bool is_feasible_point(const LinearProgram& lp, const Vector& x);
bool verify_farkas(const LinearProgram& lp, const Vector& y);
bool verify_ray(const LinearProgram& lp, const Vector& d);

/// Some x > 0 with A x > 0 (every row strictly positive), or nullopt.
/// Solves max t s.t. A x >= t 1, x >= t 1, t <= 1 and accepts when t > 0.
std::optional<Vector> strict_feasibility(const Matrix& a);

}  // namespace gridcube::lp

#endif  // GRIDCUBE_EXACTLP_HPP
