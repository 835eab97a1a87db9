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

#ifndef ABMP_ORACLE_HPP_
#define ABMP_ORACLE_HPP_

#include <optional>
#include <vector>

#include "abmp/allocation.hpp"
#include "abmp/instance.hpp"
#include "abmp/scheme.hpp"

namespace abmp {

struct OracleOptions {
  //! Cap on (n+1)^m enumerated allocations.
  long long allocation_budget = 10'000'000;
  //! Cap on Bell(m)^n enumerated schemes.
  long long scheme_budget = 10'000'000;
  //! Restrict the allocation search to full covers: every one-column must
  //! be claimed by a row holding a 1-entry for it.
  bool require_full_cover = false;
};

struct OracleResult {
  Rational value;
  PartitionScheme scheme;
  std::optional<Allocation> allocation;
};

//! Exhausts all (n+1)^m allocations and maximizes the total welfare
//! sum R_i(S_i). Ties resolve to the lexicographically smallest assignment
//! vector. Throws BudgetExceeded.
OracleResult brute_force_allocations(const Instance& inst, const OracleOptions& opts = {});

//! Exhausts all per-row set partitions (Bell(m)^n schemes) and maximizes
//! the partition value directly. Partitions enumerate canonically as
//! restricted growth strings; ties resolve to the first scheme in that
//! order. Throws BudgetExceeded.
OracleResult brute_force_schemes(const Instance& inst, const OracleOptions& opts = {});

//! All set partitions of {0..m-1} as restricted growth strings, in
//! lexicographic order: a[0] = 0 and a[j] <= 1 + max(a[0..j-1]).
std::vector<std::vector<int>> restricted_growth_strings(int m);

}  // namespace abmp

#endif  // ABMP_ORACLE_HPP_
