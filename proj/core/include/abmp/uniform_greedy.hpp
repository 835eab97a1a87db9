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

#ifndef ABMP_UNIFORM_GREEDY_HPP_
#define ABMP_UNIFORM_GREEDY_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "abmp/instance.hpp"
#include "abmp/rational.hpp"
#include "abmp/scheme.hpp"

namespace abmp {

//! Marginal contribution of one more zero-column joining a mixed bundle
//! that holds `zeros` zero-columns and `ones` one-columns, in units of one
//! uniform column probability:
//!
//!   delta(x, y) = y^2 / ((x + y) (x + y + 1)).
//!
//! Non-decreasing in y. Throws InvalidBundle when ones == 0.
Rational delta(long long zeros, long long ones);

//! How the cover phase picks the covering row for each one-column.
//!  - FirstFit: the lowest row holding a 1-entry.
//!  - Adversarial: the row with the most not-yet-covered 1-entries, which
//!    spreads the leftover one-columns thinly across rows and reproduces
//!    the worst cases of the analysis (heuristic, not guaranteed minimal).
//!  - Seeded: uniformly random among candidate rows, reproducible.
//! Ties always break toward the lowest row.
struct CoverPolicy {
  enum class Kind { FirstFit, Adversarial, Seeded };
  Kind kind = Kind::FirstFit;
  std::uint64_t seed = 0;
};

struct Cover {
  //! One (row, column) covering pair per one-column, ascending by column.
  std::vector<std::pair<int, int>> pairs;
  //! Per row: its 1-entry columns not covered in that row, available to
  //! seed a mixed bundle.
  std::vector<std::vector<int>> leftovers;
};

//! Computes a full cover of the one-columns (always possible).
Cover cover_phase(const Instance& inst, const CoverPolicy& policy = {});

struct InsertionStep {
  int column = -1;
  int row = -1;  // -1 when no row could take the column
  long long zeros_before = 0;
  long long ones = 0;
  Rational contribution;  // p_j * delta, zero for unplaced columns
};

struct UniformGreedyResult {
  PartitionScheme scheme;
  Rational value;
  Cover cover;
  std::vector<InsertionStep> trace;
};

//! Adds zero-columns one at a time (ascending index) to the mixed bundle
//! maximizing delta at insertion time; ties break toward the lowest row.
//! The final value equals the cover mass plus the traced contributions.
//! Throws NotUniform for non-uniform instances.
UniformGreedyResult greedy_completion(const Instance& inst, const Cover& cover);

//! Cover phase followed by greedy completion.
UniformGreedyResult run_uniform_greedy(const Instance& inst, const CoverPolicy& policy = {});

//! Appearances of 1-entries inside mixed bundles, divided by the number of
//! zero-columns. Throws NoZeroColumns when the instance has none.
Rational rho(const Instance& inst, const PartitionScheme& scheme);

struct MixedBundleState {
  int row = -1;
  long long zeros = 0;
  long long ones = 0;
};

//! Splits a mixed bundle with the given one- and zero-column counts into
//! `zero_columns` bundles of one zero-column each; the one-columns spread
//! as evenly as possible (the larger shares come first).
std::vector<MixedBundleState> decompose_bundle(long long one_columns, long long zero_columns);

//! Lower bound on the greedy value when the one-column appearance ratio is
//! below one: each appearance takes floor(1/rho) or ceil(1/rho)
//! zero-columns. Exact; at integer 1/rho the two branches join
//! continuously and the bound meets the optimum bound r + (1-r)rho/(rho+1).
//! Throws DomainError unless 0 < rho < 1 and 0 <= r <= 1.
Rational small_rho_lower_bound(const Rational& r, const Rational& rho);

}  // namespace abmp

#endif  // ABMP_UNIFORM_GREEDY_HPP_
