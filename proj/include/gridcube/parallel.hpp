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

#ifndef GRIDCUBE_PARALLEL_HPP
#define GRIDCUBE_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <utility>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace gridcube {

/// Every enumeration kernel has a serial reference loop and an OpenMP loop.
/// Both visit the same index range and write results by index, so their
/// outputs are identical.
enum class Exec { kSerial, kParallel };

inline int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Calls body(i) for i in [0, count). In the parallel variant the exception
/// thrown at the smallest index is rethrown after the loop, which matches
/// what the serial loop would have thrown first.
template <class Body>
void for_each_index(std::uint64_t count, Exec exec, Body&& body) {
  if (exec == Exec::kSerial || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr first_error;
  std::atomic<std::uint64_t> first_index{std::numeric_limits<std::uint64_t>::max()};
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::uint64_t>(i);
    if (u > first_index.load(std::memory_order_relaxed)) continue;
    try {
      body(u);
    } catch (...) {
#pragma omp critical(gridcube_first_error)
      {
        if (u < first_index.load()) {
          first_index.store(u);
          first_error = std::current_exception();
        }
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace gridcube

#endif  // GRIDCUBE_PARALLEL_HPP
