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

#ifndef ABMP_SCHEME_HPP_
#define ABMP_SCHEME_HPP_

#include <string>
#include <utility>
#include <vector>

#include "abmp/instance.hpp"
#include "abmp/rational.hpp"

namespace abmp {

//! A bundle is a non-empty set of column indices, kept sorted.
using Bundle = std::vector<int>;

//! One partition of the column set per row. Bundles within a row are
//! pairwise disjoint and their union is exactly all columns.
struct PartitionScheme {
  std::vector<std::vector<Bundle>> rows;

  friend bool operator==(const PartitionScheme&, const PartitionScheme&) = default;
};

//! Throws InvalidScheme (or EmptyBundle) unless every row's bundles
//! partition the full column set of `inst`.
void validate_scheme(const Instance& inst, const PartitionScheme& scheme);

enum class BundleClass { AllZero, AllOne, ColumnCovering, Mixed };

//! Classifies a bundle relative to one row. ColumnCovering means a
//! singleton {j} with a 1-entry in that row. Throws EmptyBundle.
BundleClass classify_bundle(const Instance& inst, int row, const Bundle& bundle);

//! Smooth values: within each bundle of each row, the probability-weighted
//! mean of the original 0/1 entries replaces every entry.
using SmoothMatrix = std::vector<std::vector<Rational>>;

SmoothMatrix smooth(const Instance& inst, const PartitionScheme& scheme);

//! The expected maximum column entry of the smooth matrix, exact.
Rational partition_value(const Instance& inst, const PartitionScheme& scheme);

//! Per column, the row attaining the maximum smooth value; ties go to the
//! lowest row index.
std::vector<int> argmax_rows(const SmoothMatrix& values);

struct CoverCheck {
  bool full = false;
  //! All (row, column) pairs whose singleton bundle covers a one-column.
  std::vector<std::pair<int, int>> pairs;
};

//! True iff every one-column forms a column-covering bundle in some row.
CoverCheck is_full_cover(const Instance& inst, const PartitionScheme& scheme);

//! The scheme in which every bundle is a singleton; its value equals the
//! total probability of the one-columns.
PartitionScheme singleton_scheme(const Instance& inst);

//! Canonical rendering: one line per row, bundles ordered by their minimum
//! element, columns printed 1-indexed.
std::string format_scheme(const PartitionScheme& scheme);

}  // namespace abmp

#endif  // ABMP_SCHEME_HPP_
