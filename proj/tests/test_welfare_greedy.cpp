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

#include <cmath>
#include <vector>

#include "abmp/errors.hpp"
#include "abmp/generators.hpp"
#include "abmp/oracle.hpp"
#include "abmp/valuation.hpp"
#include "abmp/welfare_greedy.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace abmp;
using test::Q;

TEST_CASE("half-tight values under the two covers") {
  // k = 2, alpha = 10: the adversarial cover leaves every row one thin
  // leftover, worth (k + (k+1)a) / ((k+a)(a+1)) = 8/33; the diagonal cover
  // leaves the heavy row intact, worth (k^2 + 2ak) / (k+a)^2 = 11/36.
  Instance inst = half_tight(2, Q(10));
  GreedyWelfareResult adversarial = lehmann_greedy(inst, {CoverPolicy::Kind::Adversarial});
  CHECK(adversarial.value == Q(8, 33));
  GreedyWelfareResult first_fit = lehmann_greedy(inst, {CoverPolicy::Kind::FirstFit});
  CHECK(first_fit.value == Q(11, 36));
  CHECK(first_fit.value >= Q(11, 36));
}

TEST_CASE("half-tight closed forms for larger parameters") {
  const long long k = 5;
  const Rational alpha = Q(50);
  Instance inst = half_tight(k, alpha);
  Rational expected_adversarial =
      (Q(k) + Q(k + 1) * alpha) / ((Q(k) + alpha) * (alpha + 1));
  CHECK(lehmann_greedy(inst, {CoverPolicy::Kind::Adversarial}).value == expected_adversarial);
  Rational opt_witness = (Q(k * k) + 2 * alpha * Q(k)) / ((Q(k) + alpha) * (Q(k) + alpha));
  CHECK(lehmann_greedy(inst, {CoverPolicy::Kind::FirstFit}).value == opt_witness);
}

TEST_CASE("no zero-columns: greedy returns the full one-mass") {
  Instance inst = parse_instance("2 3\n110\n011\n1/2 1/4 1/4\n");
  CHECK(lehmann_greedy(inst).value == 1);
}

TEST_CASE("welfare greedy matches the uniform greedy on uniform instances") {
  FamilySpec family;
  family.model = FamilySpec::ProbModel::Uniform;
  family.seed = 211;
  for (int idx = 0; idx < 30; ++idx) {
    Instance inst = draw_from_family(family, idx);
    for (auto kind : {CoverPolicy::Kind::FirstFit, CoverPolicy::Kind::Adversarial}) {
      CoverPolicy policy{kind, static_cast<std::uint64_t>(idx)};
      CHECK(lehmann_greedy(inst, policy).value == run_uniform_greedy(inst, policy).value);
    }
  }
}

TEST_CASE("welfare greedy clears 1/2 on a quick corpus") {
  FamilySpec family;
  family.model = FamilySpec::ProbModel::Alternate;
  family.seed = 223;
  for (int idx = 0; idx < 60; ++idx) {
    Instance inst = draw_from_family(family, idx);
    Rational opt = brute_force_allocations(inst).value;
    for (auto kind : {CoverPolicy::Kind::FirstFit, CoverPolicy::Kind::Adversarial}) {
      CHECK(lehmann_greedy(inst, {kind, static_cast<std::uint64_t>(idx)}).value * 2 >= opt);
    }
  }
}

TEST_CASE("single-step continuous greedy picks the best singleton rows") {
  FamilySpec family;
  family.model = FamilySpec::ProbModel::Alternate;
  family.seed = 227;
  for (int idx = 0; idx < 10; ++idx) {
    Instance inst = draw_from_family(family, idx);
    ContinuousGreedyParams params;
    params.steps = 1;
    params.samples = 4;
    params.rounding_draws = 2;
    params.seed = 9000 + idx;
    ContinuousGreedyResult result = continuous_greedy(inst, params);

    Allocation singleton{inst.n, std::vector<int>(inst.m, inst.n)};
    for (int j = 0; j < inst.m; ++j) {
      Rational best = 0;
      for (int i = 0; i < inst.n; ++i) {
        Rational value = RowValuation(inst, i).value(std::uint64_t{1} << j);
        if (value > best) {
          best = value;
          singleton.row_of[j] = i;
        }
      }
      if (singleton.row_of[j] == inst.n) singleton.row_of[j] = 0;  // all-zero marginals
    }
    CHECK(result.value >= welfare_of_allocation(inst, singleton));
  }
}

TEST_CASE("continuous greedy without zero-columns reaches the one-mass") {
  Instance inst = parse_instance("2 3\n110\n011\n1/2 1/4 1/4\n");
  ContinuousGreedyParams params;
  params.steps = 20;
  params.samples = 30;
  params.seed = 4;
  CHECK(continuous_greedy(inst, params).value == 1);
}

TEST_CASE("continuous greedy beats the 1-1/e floor on the worked example") {
  ContinuousGreedyParams params;
  params.steps = 50;
  params.samples = 200;
  params.seed = 7;
  ContinuousGreedyResult result = continuous_greedy(example3x6(), params);
  CHECK(to_double(result.value) >= (1 - std::exp(-1.0)) * to_double(Q(73, 90)));
}

TEST_CASE("continuous greedy is reproducible") {
  ContinuousGreedyParams params;
  params.steps = 10;
  params.samples = 20;
  params.seed = 12345;
  Instance inst = eight_ninths(Q(6));
  ContinuousGreedyResult a = continuous_greedy(inst, params);
  ContinuousGreedyResult b = continuous_greedy(inst, params);
  CHECK(a.value == b.value);
  CHECK(a.allocation == b.allocation);
  CHECK(a.x == b.x);
}

TEST_CASE("rounded allocations are valid") {
  FamilySpec family;
  family.model = FamilySpec::ProbModel::Alternate;
  family.seed = 229;
  ContinuousGreedyParams params;
  params.steps = 5;
  params.samples = 10;
  params.rounding_draws = 5;
  for (int idx = 0; idx < 8; ++idx) {
    Instance inst = draw_from_family(family, idx);
    params.seed = idx;
    ContinuousGreedyResult result = continuous_greedy(inst, params);
    for (int j = 0; j < inst.m; ++j) {
      CHECK(result.allocation.row_of[j] >= 0);
      CHECK(result.allocation.row_of[j] <= inst.n);
    }
    // Column sums of the fractional point stay within the polytope.
    for (int j = 0; j < inst.m; ++j) {
      double sum = 0;
      for (int i = 0; i < inst.n; ++i) sum += result.x[i][j];
      CHECK(sum <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("multilinear estimate is exact at integral points") {
  Instance inst = example3x6();
  Allocation alloc{3, {1, 2, 2, 0, 1, 0}};
  std::vector<std::vector<double>> x(inst.n, std::vector<double>(inst.m, 0.0));
  for (int j = 0; j < inst.m; ++j) {
    if (alloc.row_of[j] < inst.n) x[alloc.row_of[j]][j] = 1.0;
  }
  WelfareEstimate est = estimate_welfare(inst, x, 50, 3);
  CHECK(est.stddev == 0.0);
  CHECK(std::abs(est.mean - to_double(Q(73, 90))) < 1e-12);
}

TEST_CASE("multilinear estimate matches the exact expectation at a dyadic point") {
  // Two rows, two columns, x entries in {0, 1/2}: the expectation is a sum
  // over 16 corner configurations, computable exactly.
  Instance inst = parse_instance("2 2\n10\n01\n1/2 1/2\n");
  std::vector<std::vector<double>> x{{0.5, 0.5}, {0.5, 0.5}};
  Rational exact = 0;
  for (int mask = 0; mask < 16; ++mask) {
    Rational welfare = 0;
    for (int i = 0; i < 2; ++i) {
      std::uint64_t subset = 0;
      for (int j = 0; j < 2; ++j) {
        if (mask >> (2 * i + j) & 1) subset |= std::uint64_t{1} << j;
      }
      welfare += RowValuation(inst, i).value(subset);
    }
    exact += welfare / 16;
  }
  WelfareEstimate est = estimate_welfare(inst, x, 4000, 17);
  CHECK(std::abs(est.mean - to_double(exact)) <= 3 * est.stddev + 1e-9);
}

TEST_CASE("continuous greedy parameter validation") {
  CHECK_THROWS_AS(continuous_greedy(example3x6(), {0, 10, 5, 1}), BadParameters);
  CHECK_THROWS_AS(continuous_greedy(example3x6(), {10, 0, 5, 1}), BadParameters);
  CHECK_THROWS_AS(estimate_welfare(example3x6(), {}, 10, 1), BadParameters);
}
