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

#ifndef GRIDCUBE_TESTS_FIXTURES_HPP
#define GRIDCUBE_TESTS_FIXTURES_HPP

#include "gridcube/block.hpp"
#include "gridcube/matrix.hpp"
#include "gridcube/mdp.hpp"
#include "gridcube/rational.hpp"

namespace gridcube::testing {

inline Rational q(long p, long d = 1) {
  Rational x(p, d);
  x.canonicalize();
  return x;
}

/// b = (2,1); rows (1,-1/2), (1,0), (-1/2,1).
inline BlockMatrix k1() {
  return BlockMatrix(BlockType({2, 1}), Matrix{{q(1), q(-1, 2)}, {q(1), q(0)}, {q(-1, 2), q(1)}});
}

/// [[1,3],[0,1]]: hidden K but not Z.
inline BlockMatrix h1() { return BlockMatrix::square(Matrix{{q(1), q(3)}, {q(0), q(1)}}); }

inline Matrix h1_witness() { return Matrix{{q(4), q(-3)}, {q(0), q(1)}}; }

/// One state with two self-loop actions of reward 1 and 2, gamma = 1/2.
inline DiscountedMDP mdp1() {
  return DiscountedMDP{BlockMatrix(BlockType({2}), Matrix{{q(1)}, {q(1)}}), {q(1), q(2)}, q(1, 2)};
}

}  // namespace gridcube::testing

#endif  // GRIDCUBE_TESTS_FIXTURES_HPP
