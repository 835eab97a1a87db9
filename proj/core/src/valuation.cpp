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

#include "abmp/valuation.hpp"

#include <string>

#include "abmp/errors.hpp"

namespace abmp {

RowValuation::RowValuation(const Instance& inst, int row) : inst_(&inst), row_(row) {
  if (row < 0 || row >= inst.n) throw DomainError("row index out of range");
  if (inst.m > 63) throw DomainError("bitmask valuation supports at most 63 columns");
  row_one_mass_ = 0;
  for (int j = 0; j < inst.m; ++j) {
    if (inst.a[row][j] == 1) row_one_mass_ += inst.p[j];
  }
}

void RowValuation::check_subset(std::uint64_t subset) const {
  if (inst_->m < 64 && (subset >> inst_->m) != 0) {
    throw DomainError("subset mask has bits beyond the column count");
  }
}

Rational RowValuation::alpha(std::uint64_t subset) const {
  check_subset(subset);
  Rational sum = 0;
  for (int j = 0; j < inst_->m; ++j) {
    if ((subset >> j & 1) && inst_->a[row_][j] == 1) sum += inst_->p[j];
  }
  return sum;
}

Rational RowValuation::beta(std::uint64_t subset) const {
  check_subset(subset);
  Rational sum = 0;
  for (int j = 0; j < inst_->m; ++j) {
    if ((subset >> j & 1) && inst_->a[row_][j] == 0) sum += inst_->p[j];
  }
  return sum;
}

Rational RowValuation::gamma(std::uint64_t subset) const {
  return row_one_mass_ - alpha(subset);
}

Rational RowValuation::value(std::uint64_t subset) const {
  check_subset(subset);
  Rational a = 0, b = 0;
  for (int j = 0; j < inst_->m; ++j) {
    if (subset >> j & 1) (inst_->a[row_][j] == 1 ? a : b) += inst_->p[j];
  }
  Rational g = row_one_mass_ - a;
  Rational mixed = 0;
  if (b + g != 0) mixed = b * g / (b + g);
  return a + mixed;
}

Rational RowValuation::marginal(std::uint64_t subset, int column) const {
  if (column < 0 || column >= inst_->m) throw DomainError("column index out of range");
  if (subset >> column & 1) {
    throw AlreadyPresent("column " + std::to_string(column + 1) + " is already in the set");
  }
  return value(subset | (std::uint64_t{1} << column)) - value(subset);
}

std::uint64_t RowValuation::to_mask(const std::vector<int>& columns) {
  std::uint64_t mask = 0;
  for (int j : columns) {
    if (j < 0 || j > 63) throw DomainError("column index out of mask range");
    mask |= std::uint64_t{1} << j;
  }
  return mask;
}

}  // namespace abmp
