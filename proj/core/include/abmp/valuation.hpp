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

#ifndef ABMP_VALUATION_HPP_
#define ABMP_VALUATION_HPP_

#include <cstdint>
#include <vector>

#include "abmp/instance.hpp"
#include "abmp/rational.hpp"

namespace abmp {

//! The value a row extracts from a set of columns S: covered one-entries
//! contribute their full probability, and the claimed zero-entries share a
//! mixed bundle with the row's unclaimed one-entries,
//!
//!   R(S) = alpha(S) + beta(S) * gamma(S) / (beta(S) + gamma(S)),
//!
//! where alpha is the mass of S at the row's 1-entries, beta the mass of S
//! at its 0-entries, and gamma the mass of the row's 1-entries outside S.
//! The mixed term is zero when beta + gamma = 0. R is monotone
//! non-decreasing and submodular.
//!
//! Subsets are bitmasks over columns, which limits this interface to
//! instances with at most 63 columns; the greedy solvers track their sums
//! incrementally and have no such limit.
class RowValuation {
 public:
  RowValuation(const Instance& inst, int row);

  Rational alpha(std::uint64_t subset) const;
  Rational beta(std::uint64_t subset) const;
  Rational gamma(std::uint64_t subset) const;

  Rational value(std::uint64_t subset) const;

  //! R(S + j) - R(S); always >= 0. Throws AlreadyPresent if j is in S.
  Rational marginal(std::uint64_t subset, int column) const;

  static std::uint64_t to_mask(const std::vector<int>& columns);

 private:
  void check_subset(std::uint64_t subset) const;

  const Instance* inst_;
  int row_;
  Rational row_one_mass_;
};

}  // namespace abmp

#endif  // ABMP_VALUATION_HPP_
