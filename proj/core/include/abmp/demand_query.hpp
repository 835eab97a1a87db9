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

#ifndef ABMP_DEMAND_QUERY_HPP_
#define ABMP_DEMAND_QUERY_HPP_

#include <cstdint>
#include <vector>

#include "abmp/instance.hpp"
#include "abmp/rational.hpp"

namespace abmp {

//! An instance of the number-partition decision problem: can the weights
//! split into two halves of equal sum?
struct PartitionInstance {
  std::vector<long long> weights;  // positive integers

  long long total() const;
  void validate() const;  // throws BadParameters
};

//! The priced demand query built from a partition instance: one row with t
//! 1-entries of probability w_j / 2W priced at 5 w_j / 18W, plus a
//! zero-entry of probability 1/2 priced at zero. A subset reaching
//! objective 5/18 exists iff the weights split evenly.
struct DQInstance {
  Instance inst;                  // 1 x (t+1)
  std::vector<Rational> prices;   // q_1 .. q_{t+1}
  std::vector<long long> weights; // the originating item sizes
  Rational threshold;             // 5/18
  long long w_total = 0;          // W
  int items = 0;                  // t
};

DQInstance build_dq(const PartitionInstance& pi);

//! f(z) = 2/9 - 2z/(9W) + z/(2W + 2z): the query objective as a function
//! of the weight z left outside the chosen set. Strictly concave with its
//! unique maximum at z = W/2, where f = 5/18.
Rational dq_objective_f(long long z, long long w_total);

//! R(S) - sum of prices over S, for the item subset encoded by the low t
//! bits of `item_mask`. The zero-entry column is always taken into S: its
//! price is zero and the reduction's algebra assumes its presence.
//! Evaluates both the direct valuation route and the f-form and insists
//! they agree exactly.
Rational dq_objective(const DQInstance& dq, std::uint64_t item_mask);

struct DqSearch {
  Rational best;
  std::uint64_t best_mask = 0;       // item subset, low t bits
  std::vector<int> best_columns;     // the same subset as sorted columns,
                                     // including the zero-entry column t
};

//! Exhausts all 2^t item subsets. Throws BudgetExceeded beyond max_items.
DqSearch brute_force_dq(const DQInstance& dq, int max_items = 20);

//! Pseudo-polynomial subset-sum check for a W/2 split (the independent
//! route the reduction is certified against).
bool subset_sum_half(const PartitionInstance& pi);

//! Decides partitionability through the demand query: builds the DQ
//! instance, checks brute-force max >= 5/18, and cross-checks against the
//! subset-sum route; disagreement raises Error. An odd total short-circuits
//! to false.
bool partition_decider(const PartitionInstance& pi, int max_items = 20);

}  // namespace abmp

#endif  // ABMP_DEMAND_QUERY_HPP_
