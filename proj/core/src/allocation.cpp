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

#include "abmp/allocation.hpp"

#include <algorithm>
#include <string>

#include "abmp/errors.hpp"

namespace abmp {

std::vector<std::vector<int>> Allocation::sets() const {
  std::vector<std::vector<int>> out(n);
  for (int j = 0; j < static_cast<int>(row_of.size()); ++j) {
    if (row_of[j] < n) out[row_of[j]].push_back(j);
  }
  return out;
}

namespace {

void check_allocation(const Instance& inst, const Allocation& alloc) {
  if (alloc.n != inst.n || static_cast<int>(alloc.row_of.size()) != inst.m) {
    throw BadParameters("allocation shape does not match the instance");
  }
  for (int v : alloc.row_of) {
    if (v < 0 || v > inst.n) throw BadParameters("allocation entry out of range");
  }
}

}  // namespace

Rational welfare_of_allocation(const Instance& inst, const Allocation& alloc) {
  check_allocation(inst, alloc);
  // Per row: alpha = claimed mass at 1-entries, beta = claimed mass at
  // 0-entries, gamma = unclaimed mass of the row's 1-entries.
  std::vector<Rational> alpha(inst.n, Rational(0)), beta(inst.n, Rational(0)),
      gamma(inst.n, Rational(0));
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.m; ++j) {
      if (inst.a[i][j] == 1) gamma[i] += inst.p[j];
    }
  }
  for (int j = 0; j < inst.m; ++j) {
    int i = alloc.row_of[j];
    if (i >= inst.n) continue;
    if (inst.a[i][j] == 1) {
      alpha[i] += inst.p[j];
      gamma[i] -= inst.p[j];
    } else {
      beta[i] += inst.p[j];
    }
  }
  Rational total = 0;
  for (int i = 0; i < inst.n; ++i) {
    total += alpha[i];
    Rational denom = beta[i] + gamma[i];
    if (denom != 0) total += beta[i] * gamma[i] / denom;
  }
  return total;
}

PartitionScheme allocation_to_scheme(const Instance& inst, const Allocation& alloc) {
  check_allocation(inst, alloc);
  PartitionScheme scheme;
  scheme.rows.assign(inst.n, {});
  for (int i = 0; i < inst.n; ++i) {
    Bundle claimed_zeros, unclaimed_ones, rest;
    for (int j = 0; j < inst.m; ++j) {
      const bool claimed = alloc.row_of[j] == i;
      if (inst.a[i][j] == 1) {
        if (claimed) {
          scheme.rows[i].push_back({j});
        } else {
          unclaimed_ones.push_back(j);
        }
      } else if (claimed) {
        claimed_zeros.push_back(j);
      } else {
        rest.push_back(j);
      }
    }
    if (!claimed_zeros.empty()) {
      Bundle mixed = claimed_zeros;
      mixed.insert(mixed.end(), unclaimed_ones.begin(), unclaimed_ones.end());
      std::sort(mixed.begin(), mixed.end());
      scheme.rows[i].push_back(mixed);
    } else {
      for (int j : unclaimed_ones) scheme.rows[i].push_back({j});
    }
    if (!rest.empty()) scheme.rows[i].push_back(rest);
  }
  return scheme;
}

}  // namespace abmp
