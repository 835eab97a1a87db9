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

#ifndef ABMP_INSTANCE_HPP_
#define ABMP_INSTANCE_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "abmp/rational.hpp"

namespace abmp {

//! A binary matrix together with a probability distribution over its
//! columns. Every p_j is strictly positive and the p_j sum to exactly 1.
struct Instance {
  int n = 0;                        // rows
  int m = 0;                        // columns
  std::vector<std::vector<int>> a;  // n x m entries in {0, 1}
  std::vector<Rational> p;          // column probabilities

  bool uniform() const;

  //! Throws BadParameters when any invariant is violated.
  void validate() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

//! Column classification: A+ holds the columns with at least one 1-entry,
//! A0 the all-zero columns; per row, the columns meeting it at 1 and at 0.
struct ColumnTaxonomy {
  std::vector<int> one_columns;             // A+
  std::vector<int> zero_columns;            // A0
  std::vector<std::vector<int>> row_ones;   // A_i+
  std::vector<std::vector<int>> row_zeros;  // A_i0
  Rational one_mass;                        // total probability of A+
};

ColumnTaxonomy taxonomy(const Instance& inst);

//! Text format: first line "n m", then n rows of m characters from {0,1},
//! then one line with m probabilities ("a/b" or exact decimals) or the
//! single keyword "uniform". Throws BadInstanceFile.
Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);

std::string serialize_instance(const Instance& inst);

}  // namespace abmp

#endif  // ABMP_INSTANCE_HPP_
