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

#include "gridcube/uso.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <sstream>

#include "gridcube/config.hpp"
#include "gridcube/errors.hpp"
#include "gridcube/lpgrid.hpp"

namespace gridcube {

namespace {

template <class SignsAt>
GridUSO orientation_from_signs(const BlockType& grid, Exec exec, SignsAt&& signs_at) {
  const std::uint64_t total = grid.vertex_count();
  check_cap(total, enumeration_cap(), "grid vertices");
  GridUSO o;
  o.type = grid;
  o.out.resize(total);
  for_each_index(total, exec, [&](std::uint64_t rank) {
    const Selector v = selector_unrank(grid, rank);
    const std::vector<int> signs = signs_at(v);
    std::vector<Move>& moves = o.out[rank];
    for (std::size_t j = 0; j < grid.blocks(); ++j)
      for (int k = 0; k < grid.size(j); ++k)
        if (k != v[j] && signs[grid.flat(j, k)] < 0) moves.push_back({j, k});
  });
  return o;
}

std::vector<std::uint64_t> out_masks(const GridUSO& o, std::uint64_t rank) {
  std::vector<std::uint64_t> mask(o.type.blocks(), 0);
  for (const Move& mv : o.out[rank]) mask[mv.block] |= std::uint64_t{1} << mv.row;
  return mask;
}

}  // namespace

GridUSO uso_from_glcp(const GLCPInstance& inst, Exec exec) {
  inst.validate();
  return orientation_from_signs(inst.m.type().grown(), exec,
                                [&](const Selector& v) { return vertex_signs(inst, v); });
}

GridUSO uso_from_grid_lp(const GridLP& lp, Exec exec) {
  lp.validate();
  const BlockType grid = lp.m.type().grown();
  return orientation_from_signs(grid, exec, [&](const Selector& v) {
    const Vector rc = reduced_costs(lp, v);
    std::vector<int> signs(rc.size());
    for (std::size_t j = 0; j < grid.blocks(); ++j) {
      for (int k = 0; k < grid.size(j); ++k) {
        if (k == v[j]) continue;
        const std::size_t at = grid.flat(j, k);
        signs[at] = sgn(rc[at]);
        if (signs[at] == 0) throw DegenerateError("zero reduced cost at basis " + selector_key(v));
      }
    }
    return signs;
  });
}

bool is_antisymmetric(const GridUSO& o) {
  const BlockType& t = o.type;
  if (o.out.size() != t.vertex_count()) return false;
  for (std::uint64_t rank = 0; rank < o.out.size(); ++rank) {
    const Selector v = selector_unrank(t, rank);
    const auto mask = out_masks(o, rank);
    for (std::size_t j = 0; j < t.blocks(); ++j) {
      for (int k = 0; k < t.size(j); ++k) {
        if (k == v[j]) {
          if (mask[j] >> k & 1) return false;
          continue;
        }
        Selector u = v;
        u[j] = k;
        const auto other = out_masks(o, selector_rank(t, u));
        const bool forward = (mask[j] >> k & 1) != 0;
        const bool backward = (other[j] >> v[j] & 1) != 0;
        if (forward == backward) return false;
      }
    }
  }
  return true;
}

bool is_uso(const GridUSO& o, Exec exec) {
  const BlockType& t = o.type;
  check_cap(t.vertex_count(), uso_vertex_cap(), "USO check vertices");
  for (int s : t.sizes())
    if (s > 63) throw SizeCapError("USO check supports at most 63 rows per block");
  if (!is_antisymmetric(o)) return false;

  std::vector<std::vector<std::uint64_t>> masks(o.out.size());
  for (std::uint64_t rank = 0; rank < o.out.size(); ++rank) masks[rank] = out_masks(o, rank);

  // Subgrids are indexed in mixed radix over the nonempty row masks.
  std::uint64_t subgrids = 1;
  for (int s : t.sizes()) {
    const std::uint64_t choices = (std::uint64_t{1} << s) - 1;
    if (subgrids > enumeration_cap() / choices) throw SizeCapError("USO subgrids exceed the enumeration cap");
    subgrids *= choices;
  }
  check_cap(subgrids, enumeration_cap(), "USO subgrids");

  std::atomic<bool> ok{true};
  for_each_index(subgrids, exec, [&](std::uint64_t index) {
    if (!ok.load(std::memory_order_relaxed)) return;
    std::vector<std::uint64_t> sub(t.blocks());
    for (std::size_t j = 0; j < t.blocks(); ++j) {
      const std::uint64_t choices = (std::uint64_t{1} << t.size(j)) - 1;
      sub[j] = index % choices + 1;
      index /= choices;
    }
    std::vector<std::vector<int>> rows(t.blocks());
    for (std::size_t j = 0; j < t.blocks(); ++j)
      for (int k = 0; k < t.size(j); ++k)
        if (sub[j] >> k & 1) rows[j].push_back(k);
    std::vector<std::size_t> digit(t.blocks(), 0);
    Selector v(t.blocks());
    int sinks = 0;
    for (;;) {
      for (std::size_t j = 0; j < t.blocks(); ++j) v[j] = rows[j][digit[j]];
      const auto& mask = masks[selector_rank(t, v)];
      bool sink = true;
      for (std::size_t j = 0; j < t.blocks() && sink; ++j) sink = (mask[j] & sub[j]) == 0;
      if (sink && ++sinks > 1) break;
      std::size_t j = 0;
      while (j < t.blocks() && ++digit[j] == rows[j].size()) digit[j++] = 0;
      if (j == t.blocks()) break;
    }
    if (sinks != 1) ok.store(false);
  });
  return ok.load();
}

GridUSO reorient(const GridUSO& o, const std::set<std::size_t>& f) {
  for (std::size_t j : f)
    if (j >= o.type.blocks()) throw InvalidInputError("reorient: direction out of range");
  GridUSO r;
  r.type = o.type;
  r.out.resize(o.out.size());
  for (std::uint64_t rank = 0; rank < o.out.size(); ++rank) {
    const Selector v = selector_unrank(o.type, rank);
    const auto mask = out_masks(o, rank);
    for (std::size_t j = 0; j < o.type.blocks(); ++j) {
      const bool flip = f.count(j) > 0;
      for (int k = 0; k < o.type.size(j); ++k) {
        if (k == v[j]) continue;
        const bool out = (mask[j] >> k & 1) != 0;
        if (out != flip) r.out[rank].push_back({j, k});
      }
    }
  }
  return r;
}

bool subuso_matches(const GridUSO& big, const GridUSO& small) {
  const BlockType& s = small.type;
  if (big.type.blocks() != s.blocks()) return false;
  for (std::size_t j = 0; j < s.blocks(); ++j)
    if (big.type.size(j) != s.size(j) + 1 && big.type.size(j) != s.size(j)) return false;
  for (std::uint64_t rank = 0; rank < small.out.size(); ++rank) {
    const Selector v = selector_unrank(s, rank);
    std::vector<Move> restricted;
    for (const Move& mv : big.out_of(v))
      if (mv.row < s.size(mv.block)) restricted.push_back(mv);
    if (restricted != small.out[rank]) return false;
  }
  return true;
}

Selector global_sink(const GridUSO& o) {
  std::optional<std::uint64_t> sink;
  for (std::uint64_t rank = 0; rank < o.out.size(); ++rank) {
    if (!o.out[rank].empty()) continue;
    if (sink) throw PreconditionError("orientation has more than one sink");
    sink = rank;
  }
  if (!sink) throw PreconditionError("orientation has no sink");
  return selector_unrank(o.type, *sink);
}

std::string to_dot(const GridUSO& o) {
  std::ostringstream dot;
  dot << "digraph uso {\n  node [shape=box];\n";
  for (std::uint64_t rank = 0; rank < o.out.size(); ++rank) {
    const Selector v = selector_unrank(o.type, rank);
    dot << "  \"" << selector_key(v) << "\"";
    if (o.out[rank].empty()) dot << " [peripheries=2]";
    dot << ";\n";
  }
  for (std::uint64_t rank = 0; rank < o.out.size(); ++rank) {
    const Selector v = selector_unrank(o.type, rank);
    for (const Move& mv : o.out[rank]) {
      Selector u = v;
      u[mv.block] = mv.row;
      dot << "  \"" << selector_key(v) << "\" -> \"" << selector_key(u) << "\";\n";
    }
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace gridcube
