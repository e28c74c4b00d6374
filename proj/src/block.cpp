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

#include "gridcube/block.hpp"

#include <limits>
#include <sstream>
#include <utility>

#include "gridcube/errors.hpp"

namespace gridcube {

BlockType::BlockType(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  offsets_.reserve(sizes_.size());
  for (std::size_t j = 0; j < sizes_.size(); ++j) {
    if (sizes_[j] < 1) throw InvalidInputError("block sizes must be positive");
    offsets_.push_back(total_);
    for (int i = 0; i < sizes_[j]; ++i) owner_.push_back(j);
    total_ += static_cast<std::size_t>(sizes_[j]);
  }
}

BlockType BlockType::grown() const {
  std::vector<int> s = sizes_;
  for (auto& x : s) ++x;
  return BlockType(std::move(s));
}

std::uint64_t BlockType::vertex_count() const {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (int s : sizes_) {
    if (count > kMax / static_cast<std::uint64_t>(s)) return kMax;
    count *= static_cast<std::uint64_t>(s);
  }
  return count;
}

bool BlockType::is_all_ones() const {
  for (int s : sizes_)
    if (s != 1) return false;
  return true;
}

std::uint64_t selector_rank(const BlockType& type, const Selector& sel) {
  std::uint64_t rank = 0;
  for (std::size_t j = type.blocks(); j-- > 0;) {
    rank = rank * static_cast<std::uint64_t>(type.size(j)) + static_cast<std::uint64_t>(sel[j]);
  }
  return rank;
}

Selector selector_unrank(const BlockType& type, std::uint64_t rank) {
  Selector sel(type.blocks());
  for (std::size_t j = 0; j < type.blocks(); ++j) {
    const auto s = static_cast<std::uint64_t>(type.size(j));
    sel[j] = static_cast<int>(rank % s);
    rank /= s;
  }
  return sel;
}

void check_selector(const BlockType& type, const Selector& sel) {
  if (sel.size() != type.blocks())
    throw InvalidInputError("selector has " + std::to_string(sel.size()) + " picks for " +
                            std::to_string(type.blocks()) + " blocks");
  for (std::size_t j = 0; j < sel.size(); ++j) {
    if (sel[j] < 0 || sel[j] >= type.size(j))
      throw InvalidInputError("selector index out of range in block " + std::to_string(j + 1));
  }
}

std::string selector_key(const Selector& sel) {
  std::string key;
  for (std::size_t j = 0; j < sel.size(); ++j) {
    if (j > 0) key += "|";
    key += std::to_string(j + 1) + "," + std::to_string(sel[j] + 1);
  }
  return key;
}

Selector parse_selector_key(const std::string& key) {
  Selector sel;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, '|')) {
    auto comma = part.find(',');
    if (comma == std::string::npos) throw InvalidInputError("bad vertex key: " + key);
    const int block = std::stoi(part.substr(0, comma));
    const int row = std::stoi(part.substr(comma + 1));
    if (block != static_cast<int>(sel.size()) + 1 || row < 1)
      throw InvalidInputError("bad vertex key: " + key);
    sel.push_back(row - 1);
  }
  return sel;
}

BlockMatrix::BlockMatrix(BlockType type, Matrix entries)
    : type_(std::move(type)), entries_(std::move(entries)) {
  if (entries_.rows() != type_.rows() || entries_.cols() != type_.blocks()) {
    throw InvalidInputError("block matrix is " + std::to_string(entries_.rows()) + "x" +
                            std::to_string(entries_.cols()) + " but its type needs " +
                            std::to_string(type_.rows()) + "x" +
                            std::to_string(type_.blocks()));
  }
}

BlockMatrix BlockMatrix::square(Matrix entries) {
  if (!entries.square()) throw InvalidInputError("square block matrix expected");
  auto type = BlockType::ones(entries.rows());
  return BlockMatrix(std::move(type), std::move(entries));
}

BlockMatrix BlockMatrix::identity_pattern(const BlockType& type) {
  Matrix e(type.rows(), type.blocks());
  for (std::size_t r = 0; r < type.rows(); ++r) e(r, type.block_of(r)) = 1;
  return BlockMatrix(type, std::move(e));
}

Matrix BlockMatrix::representative(const Selector& sel) const {
  check_selector(type_, sel);
  const std::size_t n = type_.blocks();
  Matrix r(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto src = row(j, sel[j]);
    for (std::size_t k = 0; k < n; ++k) r(j, k) = src[k];
  }
  return r;
}

BlockMatrix BlockMatrix::append_rows(const Matrix& x) const {
  const std::size_t n = type_.blocks();
  if (x.rows() != n || x.cols() != n) throw InvalidInputError("[M|X] needs a square X of order n");
  BlockType grown = type_.grown();
  Matrix e(grown.rows(), n);
  for (std::size_t j = 0; j < n; ++j) {
    for (int i = 0; i < type_.size(j); ++i)
      for (std::size_t k = 0; k < n; ++k) e(grown.flat(j, i), k) = (*this)(j, i, k);
    for (std::size_t k = 0; k < n; ++k) e(grown.flat(j, type_.size(j)), k) = x(j, k);
  }
  return BlockMatrix(std::move(grown), std::move(e));
}

BlockMatrix BlockMatrix::times(const Matrix& x) const {
  return BlockMatrix(type_, entries_ * x);
}

Vector expand_to_blocks(const BlockType& type, std::span<const Rational> values) {
  if (values.size() != type.blocks()) throw InvalidInputError("expand_to_blocks: size mismatch");
  Vector out(type.rows());
  for (std::size_t r = 0; r < type.rows(); ++r) out[r] = values[type.block_of(r)];
  return out;
}

}  // namespace gridcube
