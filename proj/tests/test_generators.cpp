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

#include <vector>

#include "abmp/errors.hpp"
#include "abmp/generators.hpp"
#include "abmp/verify.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace abmp;
using test::Q;

TEST_CASE("named instances") {
  Instance worked = example3x6();
  CHECK(worked.n == 3);
  CHECK(worked.m == 6);
  CHECK(worked.a[0] == std::vector<int>{0, 1, 1, 0, 1, 0});
  CHECK(worked.a[2] == std::vector<int>{0, 1, 1, 0, 0, 0});
  CHECK(worked.p == std::vector<Rational>(6, Q(1, 6)));

  Instance tight = tight4x4();
  CHECK(tight.a == std::vector<std::vector<int>>{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0},
                                                 {1, 1, 0, 0}});

  Instance gap = eight_ninths(Q(6));
  CHECK(gap.p == std::vector<Rational>{Q(1, 9), Q(1, 9), Q(1, 9), Q(2, 3)});
  CHECK(gap.a[3] == std::vector<int>{1, 0, 1, 0});

  Instance half = half_tight(2, Q(10));
  CHECK(half.p == std::vector<Rational>{Q(1, 12), Q(1, 12), Q(5, 6)});
  CHECK(half.a == std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
}

TEST_CASE("parameter guards") {
  CHECK_THROWS_AS(eight_ninths(Q(2)), BadParameters);
  CHECK_THROWS_AS(half_tight(3, Q(2)), BadParameters);
  CHECK_THROWS_AS(half_tight(0, Q(5)), BadParameters);
  RandomSpec zero_density;
  zero_density.density = Q(0);
  CHECK_THROWS_AS(random_instance(zero_density), BadParameters);
}

TEST_CASE("random instances are reproducible and non-degenerate") {
  RandomSpec spec;
  spec.n = 4;
  spec.m = 6;
  spec.density = Q(1, 3);
  spec.dist = RandomSpec::Dist::RationalWeights;
  spec.seed = 2024;
  Instance a = random_instance(spec);
  Instance b = random_instance(spec);
  CHECK(a == b);
  spec.seed = 2025;
  CHECK(random_instance(spec) != a);

  int ones = 0;
  Rational total = 0;
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < a.m; ++j) ones += a.a[i][j];
  }
  for (const Rational& p : a.p) total += p;
  CHECK(ones >= 1);
  CHECK(total == 1);
}

TEST_CASE("generator dispatch and identifiers") {
  GeneratorSpec spec;
  spec.kind = GeneratorSpec::Kind::EightNinths;
  spec.beta = Q(6);
  CHECK(generate(spec) == eight_ninths(Q(6)));
  CHECK(instance_id(spec) == "eight-ninths(b=6/1)");

  spec.kind = GeneratorSpec::Kind::Random;
  spec.random.seed = 11;
  CHECK(instance_id(spec).find("seed=11") != std::string::npos);
}

TEST_CASE("family draws vary dimensions within bounds") {
  FamilySpec family;
  family.seed = 404;
  family.model = FamilySpec::ProbModel::Alternate;
  bool saw_nonuniform = false;
  for (int idx = 0; idx < 30; ++idx) {
    Instance inst = draw_from_family(family, idx);
    CHECK(inst.n >= family.n_min);
    CHECK(inst.n <= family.n_max);
    CHECK(inst.m >= family.m_min);
    CHECK(inst.m <= family.m_max);
    saw_nonuniform = saw_nonuniform || !inst.uniform();
  }
  CHECK(saw_nonuniform);
}

TEST_CASE("verification suites pass at reduced sizes") {
  CHECK(verify_submodularity(10, 1).ok());
  CHECK(verify_oracle_equivalence(15, 2).ok());
  CHECK(verify_dq_reduction(20, 3, 10, 6).ok());
}
