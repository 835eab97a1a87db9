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

#ifndef ABMP_VERIFY_HPP_
#define ABMP_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace abmp {

//! Outcome of one verification suite. `violations` counts failed checks;
//! messages describe the first few failures. CSV detail rows are filled
//! only when requested.
struct VerifyReport {
  std::string target;
  long long checks = 0;
  long long violations = 0;
  std::vector<std::string> messages;
  std::string csv_header;
  std::vector<std::string> csv_rows;

  bool ok() const { return violations == 0; }
};

//! Master-inequality slack over the grid r in {0, 1/20, .., 1},
//! rho in {1, 11/10, .., 10}, s in {1..s_max}: every feasible grid point
//! must satisfy r + LP(r, rho, s) >= (9/10)(rho + r)/(rho + 1), and per
//! (r, rho) the dual-case residual must be nonnegative.
VerifyReport verify_bounds_grid(long long s_max = 10, bool with_csv = false);

//! Weak duality on the same grid: both dual vertex objectives stay below
//! the LP optimum; the closed form of the second-vertex residual matches
//! its direct evaluation; the small-rho worst constant is about 0.9714.
VerifyReport verify_lp_duality(long long s_max = 10, bool with_csv = false);

//! Exhaustive monotonicity and decreasing-marginals checks of every row
//! valuation over a seeded family of instances with at most 5 columns.
VerifyReport verify_submodularity(int instances = 50, std::uint64_t seed = 2026,
                                  bool with_csv = false);

//! Equality of the scheme-enumeration and allocation-enumeration optima
//! over a seeded family of instances with n <= 3, m <= 4.
VerifyReport verify_oracle_equivalence(int instances = 100, std::uint64_t seed = 2026,
                                       bool with_csv = false);

//! The partition reduction: query maximum >= 5/18 iff an even split
//! exists, over seeded instances with t <= t_max (half of them planted);
//! for small t the f-form identity is checked on every subset.
VerifyReport verify_dq_reduction(int trials = 100, std::uint64_t seed = 2026, int t_max = 12,
                                 int exhaustive_t_max = 8, bool with_csv = false);

}  // namespace abmp

#endif  // ABMP_VERIFY_HPP_
