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

#ifndef ABMP_ALLOCATION_HPP_
#define ABMP_ALLOCATION_HPP_

#include <vector>

#include "abmp/instance.hpp"
#include "abmp/rational.hpp"
#include "abmp/scheme.hpp"

namespace abmp {

//! Assigns each column to the row whose valuation claims it, or to nobody.
//! The claimed sets S_i are disjoint by construction. Unassigned columns
//! are encoded as row index n, so comparing assignment vectors
//! lexicographically prefers low rows and treats "unassigned" as the
//! virtual (n+1)-th choice.
struct Allocation {
  int n = 0;
  std::vector<int> row_of;  // size m, values in [0, n]

  bool assigned(int column) const { return row_of[column] < n; }

  //! The claimed column sets S_0 .. S_{n-1}, each sorted.
  std::vector<std::vector<int>> sets() const;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

//! Sum over rows of R_i(S_i), exact.
Rational welfare_of_allocation(const Instance& inst, const Allocation& alloc);

//! Realizes an allocation as a partition scheme: claimed 1-entries become
//! column-covering singletons; claimed 0-entries join the row's unclaimed
//! 1-entries in one mixed bundle; everything else forms the all-zero
//! bundle. The scheme's partition value is at least the allocation's
//! welfare.
PartitionScheme allocation_to_scheme(const Instance& inst, const Allocation& alloc);

}  // namespace abmp

#endif  // ABMP_ALLOCATION_HPP_
