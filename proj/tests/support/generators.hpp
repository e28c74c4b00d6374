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

#ifndef GRIDCUBE_TESTS_GENERATORS_HPP
#define GRIDCUBE_TESTS_GENERATORS_HPP

#include <random>
#include <vector>

#include "gridcube/block.hpp"
#include "gridcube/core.hpp"
#include "gridcube/errors.hpp"
#include "gridcube/games.hpp"
#include "gridcube/glcp.hpp"
#include "gridcube/matrix.hpp"
#include "gridcube/mdp.hpp"

namespace gridcube::testing {

/// Deterministic random instance source for property tests.
class Generator {
 public:
  explicit Generator(unsigned seed) : rng_(seed) {}

  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// p/d with d in [1, max_den] and |p/d| <= bound.
  Rational rational(int bound, int max_den = 4) {
    const int d = uniform_int(1, max_den);
    const int p = uniform_int(-bound * d, bound * d);
    Rational x(p, d);
    x.canonicalize();
    return x;
  }

  Rational positive_rational(int bound, int max_den = 4) {
    const int d = uniform_int(1, max_den);
    const int p = uniform_int(1, bound * d);
    Rational x(p, d);
    x.canonicalize();
    return x;
  }

  Vector vector(std::size_t n, int bound, int max_den = 4) {
    Vector v(n);
    for (auto& x : v) x = rational(bound, max_den);
    return v;
  }

  Vector positive_vector(std::size_t n, int bound, int max_den = 4) {
    Vector v(n);
    for (auto& x : v) x = positive_rational(bound, max_den);
    return v;
  }

  BlockType block_type(std::size_t max_n, int max_b) {
    std::vector<int> b(static_cast<std::size_t>(uniform_int(1, static_cast<int>(max_n))));
    for (auto& s : b) s = uniform_int(1, max_b);
    return BlockType(b);
  }

  BlockMatrix block_matrix(const BlockType& type, int bound) {
    Matrix e(type.rows(), type.blocks());
    for (std::size_t r = 0; r < type.rows(); ++r)
      for (std::size_t k = 0; k < type.blocks(); ++k) e(r, k) = rational(bound);
    return BlockMatrix(type, std::move(e));
  }

  /// Uniform entries filtered by the determinant test.
  BlockMatrix p_matrix(const BlockType& type, int bound) {
    for (;;) {
      BlockMatrix m = block_matrix(type, bound);
      if (is_p_matrix(m, Exec::kSerial)) return m;
    }
  }

  /// Z pattern with the diagonal-column entries chosen so that Mx > 0 for a
  /// random x > 0.
  BlockMatrix k_matrix(const BlockType& type, int bound) {
    const Vector x = positive_vector(type.blocks(), 3);
    Matrix e(type.rows(), type.blocks());
    for (std::size_t r = 0; r < type.rows(); ++r) {
      const std::size_t own = type.block_of(r);
      Rational off = 0;
      for (std::size_t k = 0; k < type.blocks(); ++k) {
        if (k == own) continue;
        if (uniform_int(0, 2) == 0) continue;
        e(r, k) = -positive_rational(bound);
        off += e(r, k) * x[k];
      }
      e(r, own) = (positive_rational(bound) - off) / x[own];
    }
    return BlockMatrix(type, std::move(e));
  }

  /// Rowstochastic rational matrix of the given type; some entries are 0.
  BlockMatrix stochastic(const BlockType& type) {
    Matrix p(type.rows(), type.blocks());
    for (std::size_t r = 0; r < type.rows(); ++r) {
      std::vector<int> w(type.blocks());
      int total = 0;
      while (total == 0) {
        total = 0;
        for (auto& x : w) {
          x = uniform_int(0, 3);
          total += x;
        }
      }
      for (std::size_t k = 0; k < type.blocks(); ++k) p(r, k) = Rational(w[k], total);
    }
    for (std::size_t r = 0; r < type.rows(); ++r)
      for (std::size_t k = 0; k < type.blocks(); ++k) p(r, k).canonicalize();
    return BlockMatrix(type, std::move(p));
  }

  StochasticKForm stochastic_k(const BlockType& type, const Rational& gamma) {
    return StochasticKForm{gamma, stochastic(type)};
  }

  /// Square Z-matrix with positive row sums (a witness X).
  Matrix witness_x(std::size_t n, int bound) {
    Matrix x(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      Rational off = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j || uniform_int(0, 1) == 0) continue;
        x(j, k) = -positive_rational(bound);
        off += x(j, k);
      }
      x(j, j) = positive_rational(bound) - off;
    }
    return x;
  }

  /// M = Y X^{-1} with [Y|X] a K-matrix, so X is a proper witness of M.
  std::pair<BlockMatrix, Matrix> hidden_k(const BlockType& type, int bound) {
    const Matrix x = witness_x(type.blocks(), bound);
    Matrix y(type.rows(), type.blocks());
    for (std::size_t r = 0; r < type.rows(); ++r) {
      const std::size_t own = type.block_of(r);
      Rational off = 0;
      for (std::size_t k = 0; k < type.blocks(); ++k) {
        if (k == own || uniform_int(0, 1) == 0) continue;
        y(r, k) = -positive_rational(bound);
        off += y(r, k);
      }
      y(r, own) = positive_rational(bound) - off;
    }
    return {BlockMatrix(type, y * *inverse(x)), x};
  }

  GLCPInstance glcp(const BlockMatrix& m, int bound) { return GLCPInstance{m, vector(m.m(), bound)}; }

  /// Random MDP with rewards in [-bound, bound] and the given discount.
  DiscountedMDP mdp(std::size_t max_n, int max_a, const Rational& gamma, int bound = 3) {
    const BlockType type = block_type(max_n, max_a);
    return DiscountedMDP{stochastic(type), vector(type.rows(), bound), gamma};
  }

  StochasticGame game(std::size_t max_n, int max_a, const Rational& gamma, int bound = 3) {
    StochasticGame g;
    g.mdp = mdp(max_n, max_a, gamma, bound);
    for (std::size_t j = 0; j < g.mdp.states(); ++j)
      g.owner.push_back(uniform_int(0, 1) == 0 ? Owner::kMax : Owner::kMin);
    return g;
  }

  Rational discount() {
    static const int kNum[] = {0, 1, 1, 9};
    static const int kDen[] = {1, 4, 2, 10};
    const int i = uniform_int(0, 3);
    return Rational(kNum[i], kDen[i]);
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

/// True iff every vertex of the GLCP orientation is nondegenerate.
inline bool nondegenerate(const GLCPInstance& inst) {
  const BlockType grown = inst.m.type().grown();
  try {
    for (std::uint64_t r = 0; r < grown.vertex_count(); ++r) vertex_signs(inst, selector_unrank(grown, r));
  } catch (const Error&) {
    return false;
  }
  return true;
}

}  // namespace gridcube::testing

#endif  // GRIDCUBE_TESTS_GENERATORS_HPP
