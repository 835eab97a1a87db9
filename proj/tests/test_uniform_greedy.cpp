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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "abmp/errors.hpp"
#include "abmp/generators.hpp"
#include "abmp/oracle.hpp"
#include "abmp/rng.hpp"
#include "abmp/uniform_greedy.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace abmp;
using test::Q;

namespace {

//! Exhausts every way of distributing the zero-columns over the rows'
//! leftover bundles after a fixed cover; the greedy completion must match
//! this optimum. Uniform instances only.
Rational best_completion_value(const Instance& inst, const Cover& cover) {
  ColumnTaxonomy tax = taxonomy(inst);
  std::vector<long long> capacity;  // leftover one-columns per eligible row
  for (const auto& left : cover.leftovers) {
    if (!left.empty()) capacity.push_back(static_cast<long long>(left.size()));
  }
  const int zeros = static_cast<int>(tax.zero_columns.size());
  const int options = static_cast<int>(capacity.size()) + 1;  // rows + "nowhere"
  std::vector<int> pick(zeros, 0);
  Rational best = tax.one_mass;
  while (true) {
    std::vector<long long> zero_count(capacity.size(), 0);
    for (int z = 0; z < zeros; ++z) {
      if (pick[z] > 0) ++zero_count[pick[z] - 1];
    }
    Rational value = tax.one_mass;
    for (size_t i = 0; i < capacity.size(); ++i) {
      if (zero_count[i] == 0) continue;
      value += make_rational(zero_count[i], 1) * inst.p[0] *
               make_rational(capacity[i], zero_count[i] + capacity[i]);
    }
    best = std::max(best, value);
    int pos = zeros - 1;
    while (pos >= 0 && ++pick[pos] == options) pick[pos--] = 0;
    if (pos < 0) break;
  }
  return best;
}

Instance permute_columns(const Instance& inst, const std::vector<int>& perm) {
  Instance out = inst;
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.m; ++j) out.a[i][perm[j]] = inst.a[i][j];
  }
  for (int j = 0; j < inst.m; ++j) out.p[perm[j]] = inst.p[j];
  return out;
}

}  // namespace

TEST_CASE("delta values and monotonicity") {
  CHECK(delta(0, 1) == Q(1, 2));
  CHECK(delta(1, 1) == Q(1, 6));
  CHECK(delta(2, 3) > delta(2, 2));
  for (long long x = 0; x < 6; ++x) {
    for (long long y = 1; y < 6; ++y) CHECK(delta(x, y + 1) >= delta(x, y));
  }
  CHECK_THROWS_AS(delta(2, 0), InvalidBundle);
}

TEST_CASE("cover policies pick the documented entries on the tight instance") {
  Instance inst = tight4x4();
  Cover adversarial = cover_phase(inst, {CoverPolicy::Kind::Adversarial});
  CHECK(adversarial.pairs == std::vector<std::pair<int, int>>{{2, 0}, {3, 1}});
  Cover first_fit = cover_phase(inst, {CoverPolicy::Kind::FirstFit});
  CHECK(first_fit.pairs == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
}

TEST_CASE("the identity matrix has a unique diagonal cover") {
  Instance identity = parse_instance("3 3\n100\n010\n001\nuniform\n");
  for (auto kind : {CoverPolicy::Kind::FirstFit, CoverPolicy::Kind::Adversarial,
                    CoverPolicy::Kind::Seeded}) {
    Cover cover = cover_phase(identity, {kind, 5});
    CHECK(cover.pairs == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {2, 2}});
  }
}

TEST_CASE("greedy values on the 9/10-tight instance") {
  Instance inst = tight4x4();
  UniformGreedyResult adversarial = run_uniform_greedy(inst, {CoverPolicy::Kind::Adversarial});
  CHECK(adversarial.value == Q(3, 4));
  UniformGreedyResult first_fit = run_uniform_greedy(inst, {CoverPolicy::Kind::FirstFit});
  CHECK(first_fit.value == Q(5, 6));
  // Exactly the 9/10 gap.
  CHECK(adversarial.value / brute_force_allocations(inst).value == Q(9, 10));
}

TEST_CASE("no zero-columns means the cover is the whole answer") {
  Instance inst = parse_instance("2 3\n110\n011\nuniform\n");
  UniformGreedyResult result = run_uniform_greedy(inst);
  CHECK(result.value == 1);
  CHECK(result.trace.empty());
}

TEST_CASE("value equals cover mass plus traced contributions") {
  FamilySpec family;
  family.model = FamilySpec::ProbModel::Uniform;
  family.seed = 71;
  for (int idx = 0; idx < 40; ++idx) {
    Instance inst = draw_from_family(family, idx);
    for (auto kind : {CoverPolicy::Kind::FirstFit, CoverPolicy::Kind::Adversarial}) {
      UniformGreedyResult result = run_uniform_greedy(inst, {kind, static_cast<std::uint64_t>(idx)});
      Rational total = taxonomy(inst).one_mass;
      for (const InsertionStep& step : result.trace) total += step.contribution;
      CHECK(result.value == total);
    }
  }
}

TEST_CASE("greedy completion is optimal for its cover") {
  FamilySpec family;
  family.n_max = 4;
  family.m_max = 6;
  family.model = FamilySpec::ProbModel::Uniform;
  family.seed = 83;
  for (int idx = 0; idx < 30; ++idx) {
    Instance inst = draw_from_family(family, idx);
    for (auto kind : {CoverPolicy::Kind::FirstFit, CoverPolicy::Kind::Adversarial}) {
      Cover cover = cover_phase(inst, {kind, static_cast<std::uint64_t>(idx)});
      UniformGreedyResult result = greedy_completion(inst, cover);
      CHECK(result.value == best_completion_value(inst, result.cover));
    }
  }
}

TEST_CASE("the completed value does not depend on insertion order") {
  // Relabeling columns permutes the processing order of the same bundles.
  FamilySpec family;
  family.model = FamilySpec::ProbModel::Uniform;
  family.seed = 97;
  SplitMix64 rng(31337);
  for (int idx = 0; idx < 25; ++idx) {
    Instance inst = draw_from_family(family, idx);
    Cover cover = cover_phase(inst, {CoverPolicy::Kind::FirstFit});
    Rational value = greedy_completion(inst, cover).value;

    std::vector<int> perm(inst.m);
    std::iota(perm.begin(), perm.end(), 0);
    for (int j = inst.m - 1; j > 0; --j) {
      std::swap(perm[j], perm[rng.below(j + 1)]);
    }
    Instance shuffled = permute_columns(inst, perm);
    Cover mapped;
    for (auto [i, j] : cover.pairs) mapped.pairs.emplace_back(i, perm[j]);
    std::sort(mapped.pairs.begin(), mapped.pairs.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    mapped.leftovers.assign(inst.n, {});
    CHECK(greedy_completion(shuffled, mapped).value == value);
  }
}

TEST_CASE("greedy requires a uniform distribution") {
  CHECK_THROWS_AS(run_uniform_greedy(eight_ninths(Q(6))), NotUniform);
}

TEST_CASE("rho of the worked optimal scheme") {
  Instance inst = example3x6();
  CHECK(rho(inst, test::scheme_b3()) == Q(5, 3));
  // No mixed bundles: rho = 0.
  CHECK(rho(inst, singleton_scheme(inst)) == 0);
  // All-one instance: no zero-columns to divide by.
  Instance ones = parse_instance("1 2\n11\nuniform\n");
  CHECK_THROWS_AS(rho(ones, singleton_scheme(ones)), NoZeroColumns);
}

TEST_CASE("one mixed bundle gives rho = ones / zero-column count") {
  Instance inst = example3x6();
  PartitionScheme scheme{{{{0, 1}, {2}, {3}, {4}, {5}},
                          {{0}, {1}, {2}, {3}, {4}, {5}},
                          {{0}, {1}, {2}, {3}, {4}, {5}}}};
  CHECK(rho(inst, scheme) == Q(1, 3));
}

TEST_CASE("decomposition spreads one-columns evenly") {
  auto states = decompose_bundle(7, 3);
  REQUIRE(states.size() == 3);
  CHECK(states[0].ones == 3);
  CHECK(states[1].ones == 2);
  CHECK(states[2].ones == 2);
  for (const auto& s : states) CHECK(s.zeros == 1);

  states = decompose_bundle(4, 2);
  CHECK(states[0].ones == 2);
  CHECK(states[1].ones == 2);

  states = decompose_bundle(3, 3);
  for (const auto& s : states) CHECK(s.ones == 1);

  CHECK_THROWS_AS(decompose_bundle(3, 0), DomainError);
}

TEST_CASE("decomposed greedy bundles stay within the s..3s band") {
  FamilySpec family;
  family.model = FamilySpec::ProbModel::Uniform;
  family.seed = 101;
  for (int idx = 0; idx < 40; ++idx) {
    Instance inst = draw_from_family(family, idx);
    UniformGreedyResult result = run_uniform_greedy(inst, {CoverPolicy::Kind::FirstFit});
    std::vector<MixedBundleState> decomposed;
    for (int i = 0; i < inst.n; ++i) {
      for (const Bundle& b : result.scheme.rows[i]) {
        long long ones = 0, zeros = 0;
        for (int j : b) (inst.a[i][j] == 1 ? ones : zeros)++;
        if (ones > 0 && zeros > 0) {
          auto parts = decompose_bundle(ones, zeros);
          decomposed.insert(decomposed.end(), parts.begin(), parts.end());
        }
      }
    }
    if (decomposed.empty()) continue;
    long long s = decomposed.front().ones;
    for (const auto& part : decomposed) s = std::min(s, part.ones);
    if (s >= 1) {
      for (const auto& part : decomposed) CHECK(part.ones <= 3 * s);
    } else {
      // Bundles only overflow their one-columns when the total leftover
      // capacity cannot absorb the zero-columns.
      long long capacity = 0;
      for (const auto& left : result.cover.leftovers) {
        capacity += static_cast<long long>(left.size());
      }
      CHECK(capacity < static_cast<long long>(taxonomy(inst).zero_columns.size()));
    }
  }
}

TEST_CASE("small-rho lower bound against explicit bundlings") {
  // Bundlings with z zero-columns and a one-column appearances realize the
  // bound exactly, so it can be recomputed from first principles: a
  // appearances each take ceil(1/rho) or floor(1/rho) zero-columns.
  for (auto [appearances, zeros] : std::vector<std::pair<long long, long long>>{
           {1, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {1, 3}, {5, 6}}) {
    Rational rho_value = make_rational(appearances, zeros);
    for (const Rational& r : {Q(0), Q(1, 3), Q(1, 2), Q(3, 4)}) {
      Rational bound = small_rho_lower_bound(r, rho_value);
      // Rebuild the bundling: ceil-bundles first, then floor-bundles.
      Integer low_i = rational_floor(1 / rho_value);
      long long low = mpz_get_si(low_i.get_mpz_t());
      long long high_count, low_count;
      if (is_integer(1 / rho_value)) {
        high_count = 0;
        low_count = appearances;
      } else {
        // ceil-bundle count x satisfies x*(low+1) + (a-x)*low = zeros.
        high_count = zeros - appearances * low;
        low_count = appearances - high_count;
      }
      Rational zero_part = 0;
      zero_part += make_rational(high_count * (low + 1), 1) * make_rational(1, low + 2);
      zero_part += make_rational(low_count * low, 1) * make_rational(1, low + 1);
      Rational expected = r + (1 - r) * zero_part / make_rational(zeros, 1);
      CHECK(bound == expected);
    }
  }
}

TEST_CASE("small-rho bound joins continuously at integer 1/rho") {
  // Approaching rho = 1/2 from both sides converges to the value at 1/2.
  Rational at = small_rho_lower_bound(Q(1, 3), Q(1, 2));
  CHECK(at == Q(1, 3) + Q(2, 3) * Q(1, 3));  // r + (1-r) rho/(rho+1)
  Rational below = small_rho_lower_bound(Q(1, 3), Q(1, 2) - Q(1, 1000));
  Rational above = small_rho_lower_bound(Q(1, 3), Q(1, 2) + Q(1, 1000));
  CHECK(std::abs(to_double(below - at)) < 1e-2);
  CHECK(std::abs(to_double(above - at)) < 1e-2);
}

TEST_CASE("small-rho bound domain") {
  CHECK(small_rho_lower_bound(Q(1), Q(1, 2)) == 1);
  CHECK_THROWS_AS(small_rho_lower_bound(Q(0), Q(1)), DomainError);
  CHECK_THROWS_AS(small_rho_lower_bound(Q(0), Q(0)), DomainError);
  CHECK_THROWS_AS(small_rho_lower_bound(Q(2), Q(1, 2)), DomainError);
}

TEST_CASE("uniform greedy clears 9/10 on a quick corpus") {
  FamilySpec family;
  family.model = FamilySpec::ProbModel::Uniform;
  family.seed = 109;
  for (int idx = 0; idx < 60; ++idx) {
    Instance inst = draw_from_family(family, idx);
    Rational opt = brute_force_allocations(inst).value;
    for (auto kind : {CoverPolicy::Kind::FirstFit, CoverPolicy::Kind::Adversarial,
                      CoverPolicy::Kind::Seeded}) {
      UniformGreedyResult result = run_uniform_greedy(inst, {kind, static_cast<std::uint64_t>(idx)});
      CHECK(result.value * 10 >= opt * 9);
    }
  }
}
