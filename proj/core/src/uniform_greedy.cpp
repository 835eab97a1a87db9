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

#include "abmp/uniform_greedy.hpp"

#include <algorithm>
#include <string>

#include "abmp/errors.hpp"
#include "abmp/rng.hpp"

namespace abmp {

Rational delta(long long zeros, long long ones) {
  if (ones < 1) throw InvalidBundle("delta needs at least one one-column");
  if (zeros < 0) throw DomainError("negative zero-column count");
  Rational num(static_cast<long>(ones));
  num *= static_cast<long>(ones);
  Rational den(static_cast<long>(zeros + ones));
  den *= static_cast<long>(zeros + ones + 1);
  return num / den;
}

Cover cover_phase(const Instance& inst, const CoverPolicy& policy) {
  inst.validate();
  ColumnTaxonomy tax = taxonomy(inst);
  Cover cover;
  cover.leftovers.assign(inst.n, {});
  std::vector<int> covered_in_row(inst.n, 0);
  SplitMix64 rng(derive_stream(policy.seed, {0x10c0, 0x7e17}));
  for (int j : tax.one_columns) {
    std::vector<int> candidates;
    for (int i = 0; i < inst.n; ++i) {
      if (inst.a[i][j] == 1) candidates.push_back(i);
    }
    int pick = candidates.front();
    switch (policy.kind) {
      case CoverPolicy::Kind::FirstFit:
        break;
      case CoverPolicy::Kind::Adversarial: {
        // Consume covers from the rows with the most uncovered 1-entries,
        // leaving every row with as little mixing capacity as possible.
        int best_left = -1;
        for (int i : candidates) {
          int left = static_cast<int>(tax.row_ones[i].size()) - covered_in_row[i];
          if (left > best_left) {
            best_left = left;
            pick = i;
          }
        }
        break;
      }
      case CoverPolicy::Kind::Seeded:
        pick = candidates[rng.below(candidates.size())];
        break;
    }
    cover.pairs.emplace_back(pick, j);
    ++covered_in_row[pick];
  }
  std::vector<std::vector<int>> covered(inst.n);
  for (auto [i, j] : cover.pairs) covered[i].push_back(j);
  for (int i = 0; i < inst.n; ++i) {
    for (int j : tax.row_ones[i]) {
      if (!std::binary_search(covered[i].begin(), covered[i].end(), j)) {
        cover.leftovers[i].push_back(j);
      }
    }
  }
  std::sort(cover.pairs.begin(), cover.pairs.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return cover;
}

UniformGreedyResult greedy_completion(const Instance& inst, const Cover& cover) {
  inst.validate();
  if (!inst.uniform()) throw NotUniform("greedy completion requires a uniform distribution");
  ColumnTaxonomy tax = taxonomy(inst);

  // Validate the cover and recompute the per-row leftovers from it, so
  // hand-built covers only need the pairs.
  std::vector<int> cover_count(inst.m, 0);
  std::vector<std::vector<int>> covered(inst.n);
  for (auto [i, j] : cover.pairs) {
    if (i < 0 || i >= inst.n || j < 0 || j >= inst.m || inst.a[i][j] != 1) {
      throw BadParameters("cover pair must sit on a 1-entry");
    }
    ++cover_count[j];
    covered[i].push_back(j);
  }
  for (int j : tax.one_columns) {
    if (cover_count[j] != 1) {
      throw BadParameters("every one-column must be covered exactly once");
    }
  }

  UniformGreedyResult result;
  result.cover.pairs = cover.pairs;
  result.cover.leftovers.assign(inst.n, {});
  for (int i = 0; i < inst.n; ++i) {
    std::sort(covered[i].begin(), covered[i].end());
    for (int j : tax.row_ones[i]) {
      if (!std::binary_search(covered[i].begin(), covered[i].end(), j)) {
        result.cover.leftovers[i].push_back(j);
      }
    }
  }

  std::vector<long long> zeros(inst.n, 0), ones(inst.n, 0);
  for (int i = 0; i < inst.n; ++i) {
    ones[i] = static_cast<long long>(result.cover.leftovers[i].size());
  }
  std::vector<std::vector<int>> assigned(inst.n);

  for (int j : tax.zero_columns) {
    int best_row = -1;
    Rational best_gain;
    for (int i = 0; i < inst.n; ++i) {
      if (ones[i] == 0) continue;
      Rational gain = delta(zeros[i], ones[i]);
      if (best_row < 0 || gain > best_gain) {
        best_row = i;
        best_gain = gain;
      }
    }
    InsertionStep step;
    step.column = j;
    if (best_row >= 0) {
      step.row = best_row;
      step.zeros_before = zeros[best_row];
      step.ones = ones[best_row];
      step.contribution = inst.p[j] * best_gain;
      assigned[best_row].push_back(j);
      ++zeros[best_row];
    } else {
      step.contribution = 0;
    }
    result.trace.push_back(step);
  }

  // Assemble the scheme: covering singletons, one mixed (or all-one)
  // bundle seeded by the leftovers, and the all-zero rest.
  result.scheme.rows.assign(inst.n, {});
  for (int i = 0; i < inst.n; ++i) {
    for (int j : covered[i]) result.scheme.rows[i].push_back({j});
    if (!result.cover.leftovers[i].empty()) {
      Bundle mixed = result.cover.leftovers[i];
      mixed.insert(mixed.end(), assigned[i].begin(), assigned[i].end());
      std::sort(mixed.begin(), mixed.end());
      result.scheme.rows[i].push_back(mixed);
    }
    Bundle rest;
    std::vector<int> in_mixed(inst.m, 0);
    for (int j : assigned[i]) in_mixed[j] = 1;
    for (int j : tax.row_zeros[i]) {
      if (!in_mixed[j]) rest.push_back(j);
    }
    if (!rest.empty()) result.scheme.rows[i].push_back(rest);
  }

  result.value = partition_value(inst, result.scheme);
  return result;
}

UniformGreedyResult run_uniform_greedy(const Instance& inst, const CoverPolicy& policy) {
  if (!inst.uniform()) throw NotUniform("the uniform greedy requires a uniform distribution");
  return greedy_completion(inst, cover_phase(inst, policy));
}

Rational rho(const Instance& inst, const PartitionScheme& scheme) {
  validate_scheme(inst, scheme);
  ColumnTaxonomy tax = taxonomy(inst);
  if (tax.zero_columns.empty()) throw NoZeroColumns("rho needs at least one zero-column");
  long long appearances = 0;
  for (int i = 0; i < inst.n; ++i) {
    for (const Bundle& b : scheme.rows[i]) {
      long long bundle_ones = 0, bundle_zeros = 0;
      for (int j : b) (inst.a[i][j] == 1 ? bundle_ones : bundle_zeros)++;
      if (bundle_ones > 0 && bundle_zeros > 0) appearances += bundle_ones;
    }
  }
  return make_rational(appearances, static_cast<long long>(tax.zero_columns.size()));
}

std::vector<MixedBundleState> decompose_bundle(long long one_columns, long long zero_columns) {
  if (zero_columns < 1) throw DomainError("decomposition needs at least one zero-column");
  if (one_columns < 0) throw DomainError("negative one-column count");
  const long long low = one_columns / zero_columns;
  const long long with_high = one_columns - zero_columns * low;
  std::vector<MixedBundleState> out;
  out.reserve(zero_columns);
  for (long long k = 0; k < zero_columns; ++k) {
    out.push_back({-1, 1, k < with_high ? low + 1 : low});
  }
  return out;
}

Rational small_rho_lower_bound(const Rational& r, const Rational& rho) {
  if (r < 0 || r > 1) throw DomainError("r must lie in [0, 1]");
  if (rho <= 0 || rho >= 1) throw DomainError("rho must lie in (0, 1)");
  Rational inv = 1 / rho;
  if (is_integer(inv)) {
    // Every appearance takes exactly 1/rho zero-columns; the bound meets
    // the optimum bound r + (1-r) rho / (rho+1).
    return r + (1 - r) * rho / (rho + 1);
  }
  Rational low(rational_floor(inv));
  Rational high = low + 1;
  Rational bound = r;
  bound += (1 - r) * (1 - rho * low) * high / (1 + high);
  bound += (1 - r) * (rho * high - 1) * low / (1 + low);
  return bound;
}

}  // namespace abmp
