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

#ifndef GRIDCUBE_CLI_HPP
#define GRIDCUBE_CLI_HPP

#include <ostream>

namespace gridcube::cli {

/// Exit code when a check (oracle, recovery, verify, --check) fails.
inline constexpr int kCheckFailed = 5;
/// Exit code for internal invariant failures.
inline constexpr int kInternalError = 6;

/// Runs the gridcube command line. Exit codes: 0 success, 1 invalid input,
/// 2 precondition violated, 3 degenerate instance, 4 size cap exceeded,
/// 5 failed check, 6 internal error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gridcube::cli

#endif  // GRIDCUBE_CLI_HPP
