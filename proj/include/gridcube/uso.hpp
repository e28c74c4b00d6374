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

#ifndef GRIDCUBE_USO_HPP
#define GRIDCUBE_USO_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "gridcube/block.hpp"
#include "gridcube/glcp.hpp"
#include "gridcube/parallel.hpp"

namespace gridcube {

struct GridLP;

/// Edge from a vertex towards the vertex that picks `row` in `block`.
struct Move {
  std::size_t block = 0;
  int row = 0;

  friend auto operator<=>(const Move&, const Move&) = default;
};

/// Orientation of the grid G(type). Vertices are selectors, indexed by their
/// mixed-radix rank; out[rank] lists the outgoing moves in sorted order.
struct GridUSO {
  BlockType type;
  std::vector<std::vector<Move>> out;

  std::uint64_t vertex_count() const { return type.vertex_count(); }
  const std::vector<Move>& out_of(const Selector& v) const { return out[selector_rank(type, v)]; }

  friend bool operator==(const GridUSO&, const GridUSO&) = default;
};

/// Orientation on G(b+1) from the signs of the basic solutions.
GridUSO uso_from_glcp(const GLCPInstance& inst, Exec exec = Exec::kParallel);

/// Orientation on G(b+1) from the signs of the reduced costs.
GridUSO uso_from_grid_lp(const GridLP& lp, Exec exec = Exec::kParallel);

/// Every edge is oriented exactly one way.
bool is_antisymmetric(const GridUSO& o);

/// Antisymmetric, and every subgrid (nonempty row subset in every block)
/// has exactly one sink.
bool is_uso(const GridUSO& o, Exec exec = Exec::kParallel);

/// Reverses every edge whose two endpoints differ in a block from `f`.
GridUSO reorient(const GridUSO& o, const std::set<std::size_t>& f);

/// True iff `big` (one more row per block, or the same type) restricted to
/// the rows of `small` reproduces `small`.
bool subuso_matches(const GridUSO& big, const GridUSO& small);

/// The unique vertex without outgoing edges.
Selector global_sink(const GridUSO& o);

/// Graphviz digraph; vertices are labelled with 1-based selector keys.
std::string to_dot(const GridUSO& o);

}  // namespace gridcube

#endif  // GRIDCUBE_USO_HPP
