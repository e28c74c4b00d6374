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

#ifndef GRIDCUBE_BLOCK_HPP
#define GRIDCUBE_BLOCK_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gridcube/matrix.hpp"
#include "gridcube/rational.hpp"

namespace gridcube {

/// Block sizes b = (b_1, ..., b_n) of a vertical block matrix. Rows are
/// addressed either flat (0..m-1) or as (block j, row i) pairs, 0-based.
class BlockType {
 public:
  BlockType() = default;
  explicit BlockType(std::vector<int> sizes);

  static BlockType ones(std::size_t n) { return BlockType(std::vector<int>(n, 1)); }

  std::size_t blocks() const { return sizes_.size(); }
  std::size_t rows() const { return total_; }
  int size(std::size_t j) const { return sizes_[j]; }
  const std::vector<int>& sizes() const { return sizes_; }

  std::size_t flat(std::size_t j, int i) const { return offsets_[j] + static_cast<std::size_t>(i); }
  std::size_t offset(std::size_t j) const { return offsets_[j]; }
  std::size_t block_of(std::size_t flat_row) const { return owner_[flat_row]; }

  /// b + 1 (every block one row longer).
  BlockType grown() const;
  /// Number of maximal complementary selections, prod b_j, saturating at
  /// UINT64_MAX.
  std::uint64_t vertex_count() const;
  bool is_all_ones() const;

  friend bool operator==(const BlockType& a, const BlockType& b) {
    return a.sizes_ == b.sizes_;
  }

 private:
  std::vector<int> sizes_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> owner_;
  std::size_t total_ = 0;
};

/// One row index per block: a maximal complementary subset of N(b), i.e. a
/// grid vertex.
using Selector = std::vector<int>;

/// Mixed-radix rank of a selector (block 0 is the least significant digit).
std::uint64_t selector_rank(const BlockType& type, const Selector& sel);
Selector selector_unrank(const BlockType& type, std::uint64_t rank);
void check_selector(const BlockType& type, const Selector& sel);

/// Human-readable, 1-based: "1,2|2,1" means block 1 row 2, block 2 row 1.
std::string selector_key(const Selector& sel);
Selector parse_selector_key(const std::string& key);

/// Vertical block matrix: m x n entries grouped into n row blocks.
class BlockMatrix {
 public:
  BlockMatrix() = default;
  BlockMatrix(BlockType type, Matrix entries);

  /// A square matrix read as a block matrix of type 1.
  static BlockMatrix square(Matrix entries);
  /// E(b): row (j, i) is the j-th unit vector.
  static BlockMatrix identity_pattern(const BlockType& type);

  const BlockType& type() const { return type_; }
  const Matrix& entries() const { return entries_; }
  std::size_t n() const { return type_.blocks(); }
  std::size_t m() const { return type_.rows(); }

  const Rational& operator()(std::size_t j, int i, std::size_t k) const {
    return entries_(type_.flat(j, i), k);
  }
  std::span<const Rational> row(std::size_t j, int i) const {
    return entries_.row(type_.flat(j, i));
  }

  /// Rows picked by `sel` (row j of the result is row (j, sel[j])).
  Matrix representative(const Selector& sel) const;

  /// [M|X]: appends row j of the square matrix x as the last row of block j.
  BlockMatrix append_rows(const Matrix& x) const;

  /// M·X for a square X; keeps the block structure.
  BlockMatrix times(const Matrix& x) const;

  friend bool operator==(const BlockMatrix&, const BlockMatrix&) = default;

 private:
  BlockType type_;
  Matrix entries_;
};

/// Positive diagonal row (L) and column (H) factors.
struct DiagonalScaling {
  Vector left;
  Vector right;

  friend bool operator==(const DiagonalScaling&, const DiagonalScaling&) = default;
};

/// Entries in {-1, +1}; +1 marks a MAX-controlled block in game formulations.
using SignatureVector = std::vector<int>;

/// E(b) restricted to a representative is I; returns the flat block vector
/// whose row (j, i) equals values[j].
Vector expand_to_blocks(const BlockType& type, std::span<const Rational> values);

}  // namespace gridcube

#endif  // GRIDCUBE_BLOCK_HPP
