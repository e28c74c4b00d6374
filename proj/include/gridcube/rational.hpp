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

#ifndef GRIDCUBE_RATIONAL_HPP
#define GRIDCUBE_RATIONAL_HPP

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gridcube {

/// Exact scalar. mpq_class keeps values in lowest terms with a positive
/// denominator as long as results come from arithmetic or parse_rational.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p/q", "-p/q" or an integer. Throws InvalidInputError on a zero
/// denominator or junk.
Rational parse_rational(std::string_view text);

/// Lowest-terms "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(std::span<const Rational> v);

inline int sign(const Rational& x) { return sgn(x); }

Vector constant_vector(std::size_t n, const Rational& value);

bool all_positive(std::span<const Rational> v);
bool all_nonnegative(std::span<const Rational> v);
bool all_nonpositive(std::span<const Rational> v);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Rational max_abs(std::span<const Rational> v);

}  // namespace gridcube

#endif  // GRIDCUBE_RATIONAL_HPP
