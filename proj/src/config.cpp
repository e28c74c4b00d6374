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

#include "gridcube/config.hpp"

#include <cstdlib>
#include <optional>

#include "gridcube/errors.hpp"

namespace gridcube {

namespace {

std::optional<std::uint64_t> env_cap() {
  const char* raw = std::getenv("GRIDCUBE_CAP");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) {
    throw InvalidInputError(std::string("GRIDCUBE_CAP must be a positive integer, got '") + raw + "'");
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

std::uint64_t enumeration_cap() { return env_cap().value_or(kDefaultEnumerationCap); }

std::uint64_t uso_vertex_cap() { return env_cap().value_or(kDefaultUsoVertexCap); }

void check_cap(std::uint64_t count, std::uint64_t cap, const std::string& what) {
  if (count > cap) {
    throw SizeCapError(what + ": " + std::to_string(count) + " exceeds the cap of " +
                       std::to_string(cap) + " (set GRIDCUBE_CAP to raise it)");
  }
}

}  // namespace gridcube
