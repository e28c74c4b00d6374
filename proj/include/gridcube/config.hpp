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

#ifndef GRIDCUBE_CONFIG_HPP
#define GRIDCUBE_CONFIG_HPP

#include <cstdint>
#include <string>

namespace gridcube {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;
inline constexpr std::uint64_t kDefaultUsoVertexCap = 4096;

/// Limit on representatives / bases / policies visited by exhaustive
/// routines. GRIDCUBE_CAP overrides the default.
std::uint64_t enumeration_cap();

/// Limit on grid vertices for orientation checks (subgrid enumeration is
/// far more expensive than a vertex sweep). GRIDCUBE_CAP overrides it too.
std::uint64_t uso_vertex_cap();

/// Throws SizeCapError when count exceeds cap.
void check_cap(std::uint64_t count, std::uint64_t cap, const std::string& what);

}  // namespace gridcube

#endif  // GRIDCUBE_CONFIG_HPP
