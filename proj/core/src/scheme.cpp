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

#include "abmp/scheme.hpp"

#include <algorithm>
#include <sstream>

#include "abmp/errors.hpp"

namespace abmp {

void validate_scheme(const Instance& inst, const PartitionScheme& scheme) {
  if (static_cast<int>(scheme.rows.size()) != inst.n) {
    throw InvalidScheme("scheme must hold one partition per row");
  }
  for (int i = 0; i < inst.n; ++i) {
    std::vector<int> seen(inst.m, 0);
    for (const Bundle& b : scheme.rows[i]) {
      if (b.empty()) throw EmptyBundle("empty bundle in row " + std::to_string(i + 1));
      for (int j : b) {
        if (j < 0 || j >= inst.m) {
          throw InvalidScheme("column index out of range in row " + std::to_string(i + 1));
        }
        if (seen[j]++) {
          throw InvalidScheme("column " + std::to_string(j + 1) + " appears twice in row " +
                              std::to_string(i + 1));
        }
      }
    }
    for (int j = 0; j < inst.m; ++j) {
      if (!seen[j]) {
        throw InvalidScheme("column " + std::to_string(j + 1) + " missing from row " +
                            std::to_string(i + 1));
      }
    }
  }
}

BundleClass classify_bundle(const Instance& inst, int row, const Bundle& bundle) {
  if (bundle.empty()) throw EmptyBundle("cannot classify an empty bundle");
  int ones = 0, zeros = 0;
  for (int j : bundle) {
    if (j < 0 || j >= inst.m) throw InvalidScheme("column index out of range");
    (inst.a[row][j] == 1 ? ones : zeros)++;
  }
  if (ones > 0 && zeros > 0) return BundleClass::Mixed;
  if (zeros > 0) return BundleClass::AllZero;
  return bundle.size() == 1 ? BundleClass::ColumnCovering : BundleClass::AllOne;
}

SmoothMatrix smooth(const Instance& inst, const PartitionScheme& scheme) {
  validate_scheme(inst, scheme);
  SmoothMatrix values(inst.n, std::vector<Rational>(inst.m));
  for (int i = 0; i < inst.n; ++i) {
    for (const Bundle& b : scheme.rows[i]) {
      Rational mass = 0, ones_mass = 0;
      for (int j : b) {
        mass += inst.p[j];
        if (inst.a[i][j] == 1) ones_mass += inst.p[j];
      }
      Rational v = ones_mass / mass;
      for (int j : b) values[i][j] = v;
    }
  }
  return values;
}

Rational partition_value(const Instance& inst, const PartitionScheme& scheme) {
  SmoothMatrix values = smooth(inst, scheme);
  Rational total = 0;
  for (int j = 0; j < inst.m; ++j) {
    Rational best = values[0][j];
    for (int i = 1; i < inst.n; ++i) {
      if (values[i][j] > best) best = values[i][j];
    }
    total += inst.p[j] * best;
  }
  return total;
}

std::vector<int> argmax_rows(const SmoothMatrix& values) {
  const int n = static_cast<int>(values.size());
  const int m = n > 0 ? static_cast<int>(values[0].size()) : 0;
  std::vector<int> rows(m, 0);
  for (int j = 0; j < m; ++j) {
    for (int i = 1; i < n; ++i) {
      if (values[i][j] > values[rows[j]][j]) rows[j] = i;
    }
  }
  return rows;
}

CoverCheck is_full_cover(const Instance& inst, const PartitionScheme& scheme) {
  validate_scheme(inst, scheme);
  CoverCheck check;
  std::vector<int> covered(inst.m, 0);
  for (int i = 0; i < inst.n; ++i) {
    for (const Bundle& b : scheme.rows[i]) {
      if (b.size() == 1 && inst.a[i][b[0]] == 1) {
        check.pairs.emplace_back(i, b[0]);
        covered[b[0]] = 1;
      }
    }
  }
  std::sort(check.pairs.begin(), check.pairs.end());
  check.full = true;
  ColumnTaxonomy tax = taxonomy(inst);
  for (int j : tax.one_columns) {
    if (!covered[j]) {
      check.full = false;
      break;
    }
  }
  return check;
}

PartitionScheme singleton_scheme(const Instance& inst) {
  PartitionScheme scheme;
  scheme.rows.assign(inst.n, {});
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.m; ++j) scheme.rows[i].push_back({j});
  }
  return scheme;
}

std::string format_scheme(const PartitionScheme& scheme) {
  std::ostringstream out;
  for (size_t i = 0; i < scheme.rows.size(); ++i) {
    std::vector<Bundle> bundles = scheme.rows[i];
    for (Bundle& b : bundles) std::sort(b.begin(), b.end());
    std::sort(bundles.begin(), bundles.end(),
              [](const Bundle& x, const Bundle& y) { return x[0] < y[0]; });
    out << (i + 1) << ':';
    for (const Bundle& b : bundles) {
      out << " {";
      for (size_t k = 0; k < b.size(); ++k) {
        if (k > 0) out << ',';
        out << b[k] + 1;
      }
      out << '}';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace abmp
