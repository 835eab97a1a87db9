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

#include <string>

#include "abmp/errors.hpp"
#include "abmp/rational.hpp"
#include "abmp/rng.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace abmp;
using test::Q;

TEST_CASE("fractions parse and stay in lowest terms") {
  CHECK(rational_from_string("6/8") == Q(3, 4));
  CHECK(rational_from_string("-6/8") == Q(-3, 4));
  CHECK(rational_from_string("7") == Q(7));
  CHECK(rational_from_string(" 25/36 ") == Q(25, 36));
  CHECK(to_fraction_string(Q(3, 4)) == "3/4");
  CHECK(to_fraction_string(Q(5)) == "5/1");
  CHECK(to_fraction_string(Q(0)) == "0/1");
}

TEST_CASE("decimals convert exactly") {
  CHECK(rational_from_string("0.25") == Q(1, 4));
  CHECK(rational_from_string(".5") == Q(1, 2));
  CHECK(rational_from_string("-1.75") == Q(-7, 4));
  CHECK(rational_from_string("2.5e-3") == Q(1, 400));
  CHECK(rational_from_string("1e2") == Q(100));
  CHECK(rational_from_string("0.1") == Q(1, 10));  // no binary rounding
}

TEST_CASE("junk literals are rejected") {
  CHECK_THROWS_AS(rational_from_string(""), BadParameters);
  CHECK_THROWS_AS(rational_from_string("abc"), BadParameters);
  CHECK_THROWS_AS(rational_from_string("1/0"), BadParameters);
  CHECK_THROWS_AS(rational_from_string("1.2.3"), BadParameters);
  CHECK_THROWS_AS(rational_from_string("1e"), BadParameters);
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}

TEST_CASE("decimal rendering keeps 12 significant digits") {
  std::string dec = to_decimal_string(Q(73, 90));
  CHECK(dec.substr(0, 14) == "0.811111111111");
  CHECK(to_decimal_string(Q(1, 2)) == "0.5");
}

TEST_CASE("floor and ceil") {
  CHECK(rational_floor(Q(7, 3)) == 2);
  CHECK(rational_ceil(Q(7, 3)) == 3);
  CHECK(rational_floor(Q(-7, 3)) == -3);
  CHECK(rational_ceil(Q(-7, 3)) == -2);
  CHECK(is_integer(Q(6, 3)));
  CHECK_FALSE(is_integer(Q(7, 3)));
}

TEST_CASE("splitmix64 streams are stable and bounded draws unbiased-ish") {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  SplitMix64 c(7);
  for (int i = 0; i < 1000; ++i) {
    CHECK(c.below(13) < 13);
    double u = c.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(derive_stream(1, {2, 3}) != derive_stream(1, {3, 2}));
  CHECK(derive_stream(1, {2, 3}) == derive_stream(1, {2, 3}));
}
