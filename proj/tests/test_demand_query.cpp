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

#include <cstdlib>
#include <vector>

#include "abmp/demand_query.hpp"
#include "abmp/errors.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace abmp;
using test::Q;

TEST_CASE("query construction from weights") {
  DQInstance dq = build_dq({{1, 1}});
  CHECK(dq.inst.p == std::vector<Rational>{Q(1, 4), Q(1, 4), Q(1, 2)});
  CHECK(dq.prices == std::vector<Rational>{Q(5, 36), Q(5, 36), Q(0)});
  CHECK(dq.inst.a[0] == std::vector<int>{1, 1, 0});
  CHECK(dq.threshold == Q(5, 18));

  dq = build_dq({{2, 1, 1}});
  CHECK(dq.w_total == 4);
  CHECK(dq.inst.p == std::vector<Rational>{Q(1, 4), Q(1, 8), Q(1, 8), Q(1, 2)});
  CHECK(dq.prices == std::vector<Rational>{Q(5, 36), Q(5, 72), Q(5, 72), Q(0)});

  // No even split exists, but the instance is still well-formed.
  dq = build_dq({{3, 1}});
  CHECK(dq.inst.p[0] == Q(3, 8));
  dq.inst.validate();

  CHECK_THROWS_AS(build_dq({{0, 2}}), BadParameters);
  CHECK_THROWS_AS(build_dq({{}}), BadParameters);
}

TEST_CASE("objective landmarks") {
  DQInstance dq = build_dq({{3, 1}});
  // Everything taken: z = 0, objective 2/9.
  CHECK(dq_objective(dq, 0b11) == Q(2, 9));
  CHECK(dq_objective_f(0, 4) == Q(2, 9));
  // Nothing taken: z = W, objective 1/4.
  CHECK(dq_objective(dq, 0) == Q(1, 4));
  CHECK(dq_objective_f(4, 4) == Q(1, 4));
  // An even split pins the threshold.
  CHECK(dq_objective_f(1, 2) == Q(5, 18));
  DQInstance even = build_dq({{1, 1}});
  CHECK(dq_objective(even, 0b01) == Q(5, 18));
}

TEST_CASE("the zero-entry column never changes the objective") {
  DQInstance dq = build_dq({{2, 1, 1}});
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    CHECK(dq_objective(dq, mask) == dq_objective(dq, mask | 0b1000));
  }
}

TEST_CASE("brute force maxima") {
  DqSearch even = brute_force_dq(build_dq({{1, 1}}));
  CHECK(even.best == Q(5, 18));
  CHECK(even.best_columns == std::vector<int>{0, 2});

  DqSearch odd = brute_force_dq(build_dq({{3, 1}}));
  CHECK(odd.best < Q(5, 18));
  CHECK(odd.best == Q(17, 63));  // z = 3, the lattice point beside W/2 = 2

  DqSearch planted = brute_force_dq(build_dq({{2, 2, 2, 3, 3}}));
  CHECK(planted.best == Q(5, 18));

  DQInstance big = build_dq({std::vector<long long>(25, 1)});
  CHECK_THROWS_AS(brute_force_dq(big), BudgetExceeded);
}

TEST_CASE("f is maximized next to W/2 on the integer lattice") {
  for (long long w_total : {2LL, 3LL, 4LL, 5LL, 9LL, 16LL, 31LL}) {
    Rational best = dq_objective_f(0, w_total);
    long long best_z = 0;
    for (long long z = 1; z <= w_total; ++z) {
      Rational value = dq_objective_f(z, w_total);
      if (value > best) {
        best = value;
        best_z = z;
      }
    }
    CHECK(std::abs(2 * best_z - w_total) <= 1);
  }
}

TEST_CASE("decider agrees with the subset-sum oracle") {
  CHECK(partition_decider({{1, 1}}));
  CHECK_FALSE(partition_decider({{3, 1}}));
  CHECK(partition_decider({{2, 2, 2, 3, 3}}));
  CHECK_FALSE(partition_decider({{1, 1, 1}}));  // odd total short-circuits
  CHECK(subset_sum_half({{5, 2, 3}}));
  CHECK_FALSE(subset_sum_half({{5, 2, 4}}));
}
