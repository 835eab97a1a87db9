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

#include "abmp/oracle.hpp"

#include <limits>
#include <string>

#include "abmp/errors.hpp"

namespace abmp {

namespace {

constexpr unsigned long long kSaturated = std::numeric_limits<unsigned long long>::max();

unsigned long long sat_add(unsigned long long a, unsigned long long b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

//! Bell numbers by the Bell triangle, saturating on overflow.
unsigned long long bell_number(int m) {
  std::vector<unsigned long long> row{1};
  for (int k = 1; k <= m; ++k) {
    std::vector<unsigned long long> next;
    next.reserve(k + 1);
    next.push_back(row.back());
    for (unsigned long long v : row) next.push_back(sat_add(next.back(), v));
    row = std::move(next);
  }
  return row.front();
}

// Depth-first enumeration of assignment vectors with incremental welfare.
// Per row we track alpha (claimed 1-entry mass), beta (claimed 0-entry
// mass) and gamma (unclaimed 1-entry mass); the welfare total is kept in
// sync as columns are claimed and released.
class AllocationSearch {
 public:
  AllocationSearch(const Instance& inst, bool require_full_cover)
      : inst_(inst),
        alpha_(inst.n, Rational(0)),
        beta_(inst.n, Rational(0)),
        gamma_(inst.n, Rational(0)),
        mixed_(inst.n, Rational(0)),
        current_(inst.m, 0),
        best_value_(-1) {
    for (int i = 0; i < inst.n; ++i) {
      for (int j = 0; j < inst.m; ++j) {
        if (inst.a[i][j] == 1) gamma_[i] += inst.p[j];
      }
    }
    choices_.resize(inst.m);
    for (int j = 0; j < inst.m; ++j) {
      bool one_column = false;
      for (int i = 0; i < inst.n; ++i) {
        if (inst.a[i][j] == 1) one_column = true;
        if (!require_full_cover || inst.a[i][j] == 1) choices_[j].push_back(i);
      }
      if (!require_full_cover || !one_column) choices_[j].push_back(inst.n);
    }
  }

  unsigned long long leaf_count() const {
    unsigned long long total = 1;
    for (const auto& c : choices_) total = sat_mul(total, c.size());
    return total;
  }

  void run() { descend(0); }

  const Rational& best_value() const { return best_value_; }
  const std::vector<int>& best_assignment() const { return best_; }

 private:
  void claim(int j, int i) {
    Rational before = alpha_[i] + mixed_[i];
    if (inst_.a[i][j] == 1) {
      alpha_[i] += inst_.p[j];
      gamma_[i] -= inst_.p[j];
    } else {
      beta_[i] += inst_.p[j];
    }
    refresh(i, before);
  }

  void release(int j, int i) {
    Rational before = alpha_[i] + mixed_[i];
    if (inst_.a[i][j] == 1) {
      alpha_[i] -= inst_.p[j];
      gamma_[i] += inst_.p[j];
    } else {
      beta_[i] -= inst_.p[j];
    }
    refresh(i, before);
  }

  void refresh(int i, const Rational& before) {
    Rational denom = beta_[i] + gamma_[i];
    if (denom != 0) {
      mixed_[i] = beta_[i] * gamma_[i] / denom;
    } else {
      mixed_[i] = 0;
    }
    welfare_ += alpha_[i] + mixed_[i] - before;
  }

  void descend(int j) {
    if (j == inst_.m) {
      // Choice lists are ascending with "unassigned" last, so the first
      // maximum found is the lexicographically smallest one.
      if (welfare_ > best_value_) {
        best_value_ = welfare_;
        best_ = current_;
      }
      return;
    }
    for (int i : choices_[j]) {
      current_[j] = i;
      if (i < inst_.n) {
        claim(j, i);
        descend(j + 1);
        release(j, i);
      } else {
        descend(j + 1);
      }
    }
  }

  const Instance& inst_;
  std::vector<std::vector<int>> choices_;
  std::vector<Rational> alpha_, beta_, gamma_, mixed_;
  Rational welfare_ = 0;
  std::vector<int> current_;
  Rational best_value_;
  std::vector<int> best_;
};

}  // namespace

OracleResult brute_force_allocations(const Instance& inst, const OracleOptions& opts) {
  inst.validate();
  AllocationSearch search(inst, opts.require_full_cover);
  unsigned long long leaves = search.leaf_count();
  if (leaves > static_cast<unsigned long long>(opts.allocation_budget)) {
    throw BudgetExceeded("allocation search needs " +
                         (leaves == kSaturated ? std::string("> 1e19") : std::to_string(leaves)) +
                         " leaves, budget is " + std::to_string(opts.allocation_budget));
  }
  search.run();

  OracleResult result;
  result.allocation = Allocation{inst.n, search.best_assignment()};
  result.scheme = allocation_to_scheme(inst, *result.allocation);
  result.value = search.best_value();
  // The realized scheme can only match the welfare optimum; a mismatch
  // would mean the welfare reduction itself is broken.
  if (partition_value(inst, result.scheme) != result.value) {
    throw Error("welfare optimum does not match its realized scheme value");
  }
  return result;
}

std::vector<std::vector<int>> restricted_growth_strings(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(m, 0);
  // Lexicographic successor: bump the rightmost position that may still
  // grow (a[j] <= max of prefix), reset the suffix to zero.
  while (true) {
    out.push_back(a);
    int j = m - 1;
    for (; j > 0; --j) {
      int prefix_max = 0;
      for (int k = 0; k < j; ++k) prefix_max = std::max(prefix_max, a[k]);
      if (a[j] <= prefix_max) break;
    }
    if (j <= 0) break;
    ++a[j];
    for (int k = j + 1; k < m; ++k) a[k] = 0;
  }
  return out;
}

namespace {

//! Per-column smooth values of one row under the partition encoded by a
//! restricted growth string.
std::vector<Rational> row_smooth(const Instance& inst, int row, const std::vector<int>& rgs) {
  int blocks = 0;
  for (int id : rgs) blocks = std::max(blocks, id + 1);
  std::vector<Rational> mass(blocks, Rational(0)), ones(blocks, Rational(0));
  for (int j = 0; j < inst.m; ++j) {
    mass[rgs[j]] += inst.p[j];
    if (inst.a[row][j] == 1) ones[rgs[j]] += inst.p[j];
  }
  std::vector<Rational> values(inst.m);
  for (int j = 0; j < inst.m; ++j) values[j] = ones[rgs[j]] / mass[rgs[j]];
  return values;
}

PartitionScheme scheme_from_rgs(const Instance& inst, const std::vector<const std::vector<int>*>& rows) {
  PartitionScheme scheme;
  scheme.rows.assign(inst.n, {});
  for (int i = 0; i < inst.n; ++i) {
    int blocks = 0;
    for (int id : *rows[i]) blocks = std::max(blocks, id + 1);
    std::vector<Bundle> bundles(blocks);
    for (int j = 0; j < inst.m; ++j) bundles[(*rows[i])[j]].push_back(j);
    scheme.rows[i] = std::move(bundles);
  }
  return scheme;
}

}  // namespace

OracleResult brute_force_schemes(const Instance& inst, const OracleOptions& opts) {
  inst.validate();
  unsigned long long bell = bell_number(inst.m);
  unsigned long long total = 1;
  for (int i = 0; i < inst.n; ++i) total = sat_mul(total, bell);
  if (total > static_cast<unsigned long long>(opts.scheme_budget)) {
    throw BudgetExceeded("scheme search needs " +
                         (total == kSaturated ? std::string("> 1e19") : std::to_string(total)) +
                         " schemes, budget is " + std::to_string(opts.scheme_budget));
  }

  const std::vector<std::vector<int>> partitions = restricted_growth_strings(inst.m);

  // Precompute per (row, partition) smooth vectors when that table stays
  // small; otherwise evaluate rows on the fly.
  const bool tabulate =
      static_cast<unsigned long long>(inst.n) * partitions.size() * inst.m <= 4'000'000ULL;
  std::vector<std::vector<std::vector<Rational>>> table;
  if (tabulate) {
    table.assign(inst.n, {});
    for (int i = 0; i < inst.n; ++i) {
      table[i].reserve(partitions.size());
      for (const auto& rgs : partitions) table[i].push_back(row_smooth(inst, i, rgs));
    }
  }

  std::vector<size_t> pick(inst.n, 0);
  Rational best_value = -1;
  std::vector<size_t> best_pick;
  std::vector<std::vector<Rational>> lazy(inst.n);
  std::vector<const std::vector<Rational>*> rows(inst.n);
  while (true) {
    for (int i = 0; i < inst.n; ++i) {
      if (tabulate) {
        rows[i] = &table[i][pick[i]];
      } else {
        lazy[i] = row_smooth(inst, i, partitions[pick[i]]);
        rows[i] = &lazy[i];
      }
    }
    Rational value = 0;
    for (int j = 0; j < inst.m; ++j) {
      const Rational* best = &(*rows[0])[j];
      for (int i = 1; i < inst.n; ++i) {
        if ((*rows[i])[j] > *best) best = &(*rows[i])[j];
      }
      value += inst.p[j] * *best;
    }
    if (value > best_value) {
      best_value = value;
      best_pick = pick;
    }
    // Row-major odometer: the last row advances fastest, so the first
    // maximum found is the earliest scheme in canonical order.
    int pos = inst.n - 1;
    while (pos >= 0 && ++pick[pos] == partitions.size()) pick[pos--] = 0;
    if (pos < 0) break;
  }

  OracleResult result;
  std::vector<const std::vector<int>*> chosen(inst.n);
  for (int i = 0; i < inst.n; ++i) chosen[i] = &partitions[best_pick[i]];
  result.scheme = scheme_from_rgs(inst, chosen);
  result.value = best_value;
  return result;
}

}  // namespace abmp
