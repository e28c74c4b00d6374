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

#ifndef GRIDCUBE_ERRORS_HPP
#define GRIDCUBE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gridcube {

/// Failure categories. The numeric values double as CLI exit codes.
enum class ErrorKind : int {
  kInvalidInput = 1,
  kPrecondition = 2,
  kDegenerate = 3,
  kSizeCap = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed files, dimension mismatches, bad selectors.
class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string& what)
      : Error(ErrorKind::kInvalidInput, what) {}
};

/// An operation was called outside its domain (e.g. d >= min reward).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorKind::kPrecondition, what) {}
};

/// A singular representative showed up where a P-matrix was promised.
class NotPMatrixError : public PreconditionError {
 public:
  explicit NotPMatrixError(const std::string& what)
      : PreconditionError(what) {}
};

/// A basic value or reduced cost is exactly zero, so an edge has no
/// orientation.
class DegenerateError : public Error {
 public:
  explicit DegenerateError(const std::string& what)
      : Error(ErrorKind::kDegenerate, what) {}
};

/// Exhaustive enumeration would exceed the configured cap.
class SizeCapError : public Error {
 public:
  explicit SizeCapError(const std::string& what)
      : Error(ErrorKind::kSizeCap, what) {}
};

}  // namespace gridcube

#endif  // GRIDCUBE_ERRORS_HPP
