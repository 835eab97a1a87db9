// Copyright 2026 The abmp Authors.
//
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

#ifndef ABMP_RATIONAL_HPP_
#define ABMP_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace abmp {

// All values in the library are exact fractions: partition values, smooth
// entries, probabilities, LP optima. Arithmetic never rounds; GMP keeps
// every value in lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

//! Builds num/den in canonical form. Throws DomainError if den == 0.
Rational make_rational(long long num, long long den);

//! Parses "a/b", a plain integer, or a decimal such as "0.25" or "2.5e-3".
//! Decimals convert exactly (no binary rounding). Throws BadParameters.
Rational rational_from_string(std::string_view text);

//! Renders as "num/den", including a "/1" suffix for integers.
std::string to_fraction_string(const Rational& q);

//! Renders a decimal approximation with `digits` significant digits.
std::string to_decimal_string(const Rational& q, int digits = 12);

double to_double(const Rational& q);

//! Largest integer <= q.
Integer rational_floor(const Rational& q);

//! Smallest integer >= q.
Integer rational_ceil(const Rational& q);

bool is_integer(const Rational& q);

}  // namespace abmp

#endif  // ABMP_RATIONAL_HPP_
