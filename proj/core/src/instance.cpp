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

#include "abmp/instance.hpp"

#include <sstream>

#include "abmp/errors.hpp"

namespace abmp {

bool Instance::uniform() const {
  for (int j = 1; j < m; ++j) {
    if (p[j] != p[0]) return false;
  }
  return true;
}

void Instance::validate() const {
  if (n < 1 || m < 1) throw BadParameters("instance needs at least one row and one column");
  if (static_cast<int>(a.size()) != n) throw BadParameters("row count mismatch");
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != m) throw BadParameters("column count mismatch");
    for (int v : row) {
      if (v != 0 && v != 1) throw BadParameters("matrix entries must be 0 or 1");
    }
  }
  if (static_cast<int>(p.size()) != m) throw BadParameters("probability count mismatch");
  Rational total = 0;
  for (const Rational& q : p) {
    if (q <= 0) throw BadParameters("column probabilities must be positive");
    total += q;
  }
  if (total != 1) {
    throw BadParameters("column probabilities must sum to 1, got " + to_fraction_string(total));
  }
}

ColumnTaxonomy taxonomy(const Instance& inst) {
  ColumnTaxonomy tax;
  tax.row_ones.resize(inst.n);
  tax.row_zeros.resize(inst.n);
  tax.one_mass = 0;
  for (int j = 0; j < inst.m; ++j) {
    bool any_one = false;
    for (int i = 0; i < inst.n; ++i) {
      if (inst.a[i][j] == 1) {
        tax.row_ones[i].push_back(j);
        any_one = true;
      } else {
        tax.row_zeros[i].push_back(j);
      }
    }
    if (any_one) {
      tax.one_columns.push_back(j);
      tax.one_mass += inst.p[j];
    } else {
      tax.zero_columns.push_back(j);
    }
  }
  return tax;
}

Instance parse_instance(std::istream& in) {
  Instance inst;
  if (!(in >> inst.n >> inst.m)) throw BadInstanceFile("missing 'n m' header");
  if (inst.n < 1 || inst.m < 1) throw BadInstanceFile("instance needs n >= 1 and m >= 1");
  inst.a.assign(inst.n, std::vector<int>(inst.m, 0));
  for (int i = 0; i < inst.n; ++i) {
    std::string row;
    if (!(in >> row)) throw BadInstanceFile("missing matrix row");
    if (static_cast<int>(row.size()) != inst.m) {
      throw BadInstanceFile("matrix row has wrong length: '" + row + "'");
    }
    for (int j = 0; j < inst.m; ++j) {
      if (row[j] == '0') {
        inst.a[i][j] = 0;
      } else if (row[j] == '1') {
        inst.a[i][j] = 1;
      } else {
        throw BadInstanceFile("matrix entries must be 0 or 1");
      }
    }
  }
  std::string token;
  if (!(in >> token)) throw BadInstanceFile("missing probability line");
  if (token == "uniform") {
    inst.p.assign(inst.m, make_rational(1, inst.m));
  } else {
    inst.p.clear();
    inst.p.reserve(inst.m);
    try {
      inst.p.push_back(rational_from_string(token));
      for (int j = 1; j < inst.m; ++j) {
        if (!(in >> token)) throw BadInstanceFile("missing probability entries");
        inst.p.push_back(rational_from_string(token));
      }
    } catch (const BadParameters& e) {
      throw BadInstanceFile(std::string("bad probability: ") + e.what());
    }
  }
  try {
    inst.validate();
  } catch (const BadParameters& e) {
    throw BadInstanceFile(e.what());
  }
  return inst;
}

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << inst.n << ' ' << inst.m << '\n';
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.m; ++j) out << inst.a[i][j];
    out << '\n';
  }
  for (int j = 0; j < inst.m; ++j) {
    if (j > 0) out << ' ';
    out << to_fraction_string(inst.p[j]);
  }
  out << '\n';
  return out.str();
}

}  // namespace abmp
