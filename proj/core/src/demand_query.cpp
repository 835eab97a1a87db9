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

#include "abmp/demand_query.hpp"

#include <string>

#include "abmp/errors.hpp"

namespace abmp {

long long PartitionInstance::total() const {
  long long sum = 0;
  for (long long w : weights) sum += w;
  return sum;
}

void PartitionInstance::validate() const {
  if (weights.empty()) throw BadParameters("partition instance needs at least one weight");
  long long sum = 0;
  for (long long w : weights) {
    if (w < 1) throw BadParameters("weights must be positive integers");
    if (w > (1LL << 40)) throw BadParameters("weight too large");
    sum += w;
  }
  if (sum < 2) throw BadParameters("total weight must be at least 2");
}

DQInstance build_dq(const PartitionInstance& pi) {
  pi.validate();
  const long long w_total = pi.total();
  const int t = static_cast<int>(pi.weights.size());

  DQInstance dq;
  dq.items = t;
  dq.w_total = w_total;
  dq.weights = pi.weights;
  dq.threshold = Rational(5, 18);
  dq.inst.n = 1;
  dq.inst.m = t + 1;
  dq.inst.a.assign(1, std::vector<int>(t + 1, 1));
  dq.inst.a[0][t] = 0;
  dq.inst.p.resize(t + 1);
  dq.prices.resize(t + 1);
  for (int j = 0; j < t; ++j) {
    dq.inst.p[j] = make_rational(pi.weights[j], 2 * w_total);
    dq.prices[j] = make_rational(5 * pi.weights[j], 18 * w_total);
  }
  dq.inst.p[t] = Rational(1, 2);
  dq.prices[t] = 0;
  dq.inst.validate();
  return dq;
}

Rational dq_objective_f(long long z, long long w_total) {
  if (z < 0 || w_total < 1) throw DomainError("f needs z >= 0 and W >= 1");
  Rational value(2, 9);
  value -= make_rational(2 * z, 9 * w_total);
  value += make_rational(z, 2 * w_total + 2 * z);
  return value;
}

Rational dq_objective(const DQInstance& dq, std::uint64_t item_mask) {
  if (dq.items > 0 && (item_mask >> dq.items) != 0) {
    // Tolerate a set bit for the zero-entry column; its membership cannot
    // change the objective.
    if ((item_mask >> dq.items) != 1 || dq.items >= 63) {
      throw DomainError("subset mask has bits beyond the item count");
    }
    item_mask &= (std::uint64_t{1} << dq.items) - 1;
  }

  // Direct route: R(S u {zero column}) minus the prices of S.
  Rational alpha = 0, gamma = 0, price_sum = 0;
  for (int j = 0; j < dq.items; ++j) {
    if (item_mask >> j & 1) {
      alpha += dq.inst.p[j];
      price_sum += dq.prices[j];
    } else {
      gamma += dq.inst.p[j];
    }
  }
  const Rational beta = dq.inst.p[dq.items];  // the zero-entry, always in S
  Rational direct = alpha - price_sum;
  if (beta + gamma != 0) direct += beta * gamma / (beta + gamma);

  // f-form route on the weight left outside S.
  long long outside = 0;
  for (int j = 0; j < dq.items; ++j) {
    if (!(item_mask >> j & 1)) outside += dq.weights[j];
  }
  Rational via_f = dq_objective_f(outside, dq.w_total);

  if (direct != via_f) {
    throw Error("demand query objective mismatch: direct route " + to_fraction_string(direct) +
                " vs f-form " + to_fraction_string(via_f));
  }
  return direct;
}

DqSearch brute_force_dq(const DQInstance& dq, int max_items) {
  if (dq.items > max_items) {
    throw BudgetExceeded("demand query search limited to " + std::to_string(max_items) +
                         " items, instance has " + std::to_string(dq.items));
  }
  DqSearch search;
  bool have = false;
  const std::uint64_t limit = std::uint64_t{1} << dq.items;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    Rational value = dq_objective(dq, mask);
    if (!have || value > search.best) {
      have = true;
      search.best = value;
      search.best_mask = mask;
    }
  }
  for (int j = 0; j < dq.items; ++j) {
    if (search.best_mask >> j & 1) search.best_columns.push_back(j);
  }
  search.best_columns.push_back(dq.items);
  return search;
}

bool subset_sum_half(const PartitionInstance& pi) {
  pi.validate();
  const long long w_total = pi.total();
  if (w_total % 2 != 0) return false;
  const long long half = w_total / 2;
  std::vector<char> reachable(half + 1, 0);
  reachable[0] = 1;
  for (long long w : pi.weights) {
    for (long long s = half; s >= w; --s) {
      if (reachable[s - w]) reachable[s] = 1;
    }
  }
  return reachable[half] != 0;
}

bool partition_decider(const PartitionInstance& pi, int max_items) {
  pi.validate();
  if (pi.total() % 2 != 0) return false;  // odd totals cannot split
  DQInstance dq = build_dq(pi);
  DqSearch search = brute_force_dq(dq, max_items);
  const bool via_query = search.best >= dq.threshold;
  const bool via_subset_sum = subset_sum_half(pi);
  if (via_query != via_subset_sum) {
    throw Error("demand query verdict disagrees with the subset-sum oracle");
  }
  return via_query;
}

}  // namespace abmp
