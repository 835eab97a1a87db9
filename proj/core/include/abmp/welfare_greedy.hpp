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

#ifndef ABMP_WELFARE_GREEDY_HPP_
#define ABMP_WELFARE_GREEDY_HPP_

#include <cstdint>
#include <vector>

#include "abmp/allocation.hpp"
#include "abmp/instance.hpp"
#include "abmp/scheme.hpp"
#include "abmp/uniform_greedy.hpp"

namespace abmp {

struct GreedyWelfareResult {
  Allocation allocation;
  PartitionScheme scheme;
  Rational value;
};

//! Item greedy for general distributions: covers every one-column at a row
//! chosen by `policy` (any such cover maximizes the immediate increase),
//! then claims each zero-column for the row with the largest exact
//! marginal, skipping it when every marginal is zero. Ties break toward
//! the lowest row. Guarantees at least half the optimal partition value.
GreedyWelfareResult lehmann_greedy(const Instance& inst, const CoverPolicy& policy = {});

struct ContinuousGreedyParams {
  int steps = 100;
  int samples = 200;
  int rounding_draws = 20;
  std::uint64_t seed = 0;
};

struct ContinuousGreedyResult {
  Allocation allocation;
  PartitionScheme scheme;
  Rational value;                      // exact welfare of the best rounding
  std::vector<std::vector<double>> x;  // final fractional point, n x m
};

//! Maximizes the multilinear relaxation of the welfare over the partition
//! matroid polytope (column sums at most one) with `steps` increments,
//! estimating each (row, column) marginal from `samples` Monte-Carlo
//! draws, then rounds each column independently by its fractional weights.
//! The best of `rounding_draws` integral allocations is re-evaluated
//! exactly. Sampling substreams derive from (seed, step, row, column,
//! sample), so the result is reproducible and order-independent.
ContinuousGreedyResult continuous_greedy(const Instance& inst,
                                         const ContinuousGreedyParams& params = {});

struct WelfareEstimate {
  double mean = 0;
  double stddev = 0;  // of the mean
};

//! Monte-Carlo estimate of the multilinear welfare extension at x: each
//! (row, column) membership is an independent coin with probability
//! x[i][j]. At integral x the estimate is exact.
WelfareEstimate estimate_welfare(const Instance& inst, const std::vector<std::vector<double>>& x,
                                 int samples, std::uint64_t seed);

}  // namespace abmp

#endif  // ABMP_WELFARE_GREEDY_HPP_
