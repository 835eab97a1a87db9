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

#include "abmp/verify.hpp"

#include <cmath>
#include <sstream>

#include "abmp/bounds.hpp"
#include "abmp/demand_query.hpp"
#include "abmp/errors.hpp"
#include "abmp/generators.hpp"
#include "abmp/oracle.hpp"
#include "abmp/rng.hpp"
#include "abmp/valuation.hpp"

namespace abmp {

namespace {

constexpr size_t kMaxMessages = 20;

void record(VerifyReport& report, bool ok, const std::string& what) {
  ++report.checks;
  if (!ok) {
    ++report.violations;
    if (report.messages.size() < kMaxMessages) report.messages.push_back(what);
  }
}

std::vector<Rational> grid_r() {
  std::vector<Rational> out;
  for (int i = 0; i <= 20; ++i) out.push_back(Rational(i, 20));
  for (auto& q : out) q.canonicalize();
  return out;
}

std::vector<Rational> grid_rho() {
  std::vector<Rational> out;
  for (int i = 0; i <= 90; ++i) out.push_back(Rational(10 + i, 10));
  for (auto& q : out) q.canonicalize();
  return out;
}

}  // namespace

VerifyReport verify_bounds_grid(long long s_max, bool with_csv) {
  VerifyReport report;
  report.target = "bounds-grid";
  report.csv_header = "r,rho,s,feasible,primal_frac,d1_frac,d2_frac,slack_frac";
  for (const Rational& r : grid_r()) {
    for (const Rational& rho : grid_rho()) {
      for (long long s = 1; s <= s_max; ++s) {
        BoundReport point = bound_report(r, rho, s);
        if (point.feasible) {
          record(report, point.slack >= 0,
                 "negative master slack at r=" + to_fraction_string(r) +
                     " rho=" + to_fraction_string(rho) + " s=" + std::to_string(s));
        }
        if (with_csv) {
          std::ostringstream row;
          row << to_fraction_string(r) << ',' << to_fraction_string(rho) << ',' << s << ','
              << (point.feasible ? 1 : 0) << ','
              << (point.feasible ? to_fraction_string(point.primal) : "") << ','
              << to_fraction_string(point.d1) << ',' << to_fraction_string(point.d2) << ','
              << (point.feasible ? to_fraction_string(point.slack) : "");
          report.csv_rows.push_back(row.str());
        }
      }
      MasterReport master = master_inequality(r, rho, s_max);
      record(report, master.any_feasible,
             "no feasible s at r=" + to_fraction_string(r) + " rho=" + to_fraction_string(rho));
      if (master.any_feasible) {
        record(report, master.slack >= 0,
               "master inequality fails at r=" + to_fraction_string(r) +
                   " rho=" + to_fraction_string(rho));
      }
      record(report, master.case_residual >= 0,
             "dual case residual negative at r=" + to_fraction_string(r) +
                 " rho=" + to_fraction_string(rho));
    }
  }
  return report;
}

VerifyReport verify_lp_duality(long long s_max, bool with_csv) {
  VerifyReport report;
  report.target = "lp-duality";
  report.csv_header = "r,rho,s,primal_frac,d1_frac,d2_frac";
  for (const Rational& r : grid_r()) {
    for (const Rational& rho : grid_rho()) {
      for (long long s = 1; s <= s_max; ++s) {
        DualVertices duals = dual_vertices(r, rho, s);
        record(report, duals.d1.feasible && duals.d2.feasible,
               "dual vertex infeasible at s=" + std::to_string(s));
        Rational primal;
        bool feasible = true;
        try {
          primal = lp_solve(r, rho, s).value;
        } catch (const Infeasible&) {
          feasible = false;  // primal empty: weak duality is vacuous
        }
        if (feasible) {
          record(report, duals.d1.objective <= primal && duals.d2.objective <= primal,
                 "weak duality fails at r=" + to_fraction_string(r) +
                     " rho=" + to_fraction_string(rho) + " s=" + std::to_string(s));
        }
        record(report, case2_residual(r, rho, s) == case2_residual_closed(r, rho, s),
               "closed-form residual mismatch at r=" + to_fraction_string(r) +
                   " rho=" + to_fraction_string(rho) + " s=" + std::to_string(s));
        if (with_csv && feasible) {
          std::ostringstream row;
          row << to_fraction_string(r) << ',' << to_fraction_string(rho) << ',' << s << ','
              << to_fraction_string(primal) << ',' << to_fraction_string(duals.d1.objective)
              << ',' << to_fraction_string(duals.d2.objective);
          report.csv_rows.push_back(row.str());
        }
      }
    }
  }
  // The small-rho branch bottoms out near 0.9714 at k = 1 and stays above
  // 0.97 for every k.
  double worst = small_rho_ratio_floor(1);
  record(report, std::abs(worst - 0.9714) <= 1e-3, "small-rho constant drifted");
  for (long long k = 1; k <= 50; ++k) {
    record(report, small_rho_ratio_floor(k) >= 0.97, "small-rho floor below 0.97");
  }
  return report;
}

VerifyReport verify_submodularity(int instances, std::uint64_t seed, bool with_csv) {
  VerifyReport report;
  report.target = "submodularity";
  report.csv_header = "instance,row,checks";
  FamilySpec family;
  family.n_min = 1;
  family.n_max = 4;
  family.m_min = 1;
  family.m_max = 5;
  family.model = FamilySpec::ProbModel::Alternate;
  family.seed = seed;
  for (int idx = 0; idx < instances; ++idx) {
    Instance inst = draw_from_family(family, idx);
    const int m = inst.m;
    for (int i = 0; i < inst.n; ++i) {
      RowValuation valuation(inst, i);
      std::vector<Rational> value(1u << m);
      for (std::uint64_t mask = 0; mask < (1u << m); ++mask) {
        value[mask] = valuation.value(mask);
      }
      long long row_checks = 0;
      record(report, value[0] == 0, "R(empty) != 0");
      bool monotone = true, submodular = true;
      for (std::uint64_t big = 0; big < (1u << m); ++big) {
        for (int j = 0; j < m; ++j) {
          if (big >> j & 1) continue;
          const std::uint64_t bit = std::uint64_t{1} << j;
          if (value[big | bit] < value[big]) monotone = false;
          // Every subset of `big` must have at least its marginal.
          Rational marginal_big = value[big | bit] - value[big];
          for (std::uint64_t sub = big;; sub = (sub - 1) & big) {
            ++row_checks;
            if (value[sub | bit] - value[sub] < marginal_big) submodular = false;
            if (sub == 0) break;
          }
        }
      }
      record(report, monotone, "monotonicity fails on instance " + std::to_string(idx));
      record(report, submodular,
             "decreasing marginals fail on instance " + std::to_string(idx));
      if (with_csv) {
        std::ostringstream row;
        row << idx << ',' << i << ',' << row_checks;
        report.csv_rows.push_back(row.str());
      }
    }
  }
  return report;
}

VerifyReport verify_oracle_equivalence(int instances, std::uint64_t seed, bool with_csv) {
  VerifyReport report;
  report.target = "oracle-equivalence";
  report.csv_header = "instance,n,m,alloc_frac,scheme_frac";
  FamilySpec family;
  family.n_min = 1;
  family.n_max = 3;
  family.m_min = 1;
  family.m_max = 4;
  family.model = FamilySpec::ProbModel::Alternate;
  family.seed = seed;
  for (int idx = 0; idx < instances; ++idx) {
    Instance inst = draw_from_family(family, idx);
    OracleResult by_alloc = brute_force_allocations(inst);
    OracleResult by_scheme = brute_force_schemes(inst);
    record(report, by_alloc.value == by_scheme.value,
           "oracle values differ on instance " + std::to_string(idx) + ": " +
               to_fraction_string(by_alloc.value) + " vs " +
               to_fraction_string(by_scheme.value));
    if (with_csv) {
      std::ostringstream row;
      row << idx << ',' << inst.n << ',' << inst.m << ','
          << to_fraction_string(by_alloc.value) << ',' << to_fraction_string(by_scheme.value);
      report.csv_rows.push_back(row.str());
    }
  }
  return report;
}

namespace {

PartitionInstance draw_partition_instance(std::uint64_t seed, std::uint64_t index, int t_max) {
  SplitMix64 rng(derive_stream(seed, {0xd0, index}));
  const int t = 2 + static_cast<int>(rng.below(t_max - 1));
  PartitionInstance pi;
  pi.weights.resize(t);
  const bool plant = index % 2 == 0;
  if (!plant) {
    for (int j = 0; j < t; ++j) pi.weights[j] = 1 + static_cast<long long>(rng.below(30));
    return pi;
  }
  // Plant an even split: draw t-1 weights, split them at random, and add a
  // final weight balancing the two sides.
  for (int attempt = 0; attempt < 100; ++attempt) {
    long long side[2] = {0, 0};
    for (int j = 0; j + 1 < t; ++j) {
      pi.weights[j] = 1 + static_cast<long long>(rng.below(30));
      side[rng.below(2)] += pi.weights[j];
    }
    long long diff = side[0] > side[1] ? side[0] - side[1] : side[1] - side[0];
    if (diff >= 1) {
      pi.weights[t - 1] = diff;
      return pi;
    }
  }
  pi.weights[t - 1] = 2;  // give up on planting; any valid weight works
  return pi;
}

}  // namespace

VerifyReport verify_dq_reduction(int trials, std::uint64_t seed, int t_max, int exhaustive_t_max,
                                 bool with_csv) {
  VerifyReport report;
  report.target = "dq-reduction";
  report.csv_header = "trial,t,w_total,splittable,query_max_frac";
  for (int trial = 0; trial < trials; ++trial) {
    PartitionInstance pi = draw_partition_instance(seed, trial, t_max);
    DQInstance dq = build_dq(pi);
    DqSearch search;
    bool equivalence_ok = true;
    bool splittable = false;
    try {
      search = brute_force_dq(dq);
      splittable = subset_sum_half(pi);
      equivalence_ok = (search.best >= dq.threshold) == splittable;
    } catch (const Error&) {
      equivalence_ok = false;
    }
    record(report, equivalence_ok,
           "reduction equivalence fails on trial " + std::to_string(trial));

    if (dq.items <= exhaustive_t_max) {
      // Exhaustive f-form identity; dq_objective checks both routes on
      // every call, and the zero-entry bit must be ignored.
      bool identity_ok = true;
      const std::uint64_t limit = std::uint64_t{1} << dq.items;
      try {
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
          long long outside = 0;
          for (int j = 0; j < dq.items; ++j) {
            if (!(mask >> j & 1)) outside += pi.weights[j];
          }
          if (dq_objective(dq, mask) != dq_objective_f(outside, dq.w_total)) identity_ok = false;
          if (dq_objective(dq, mask) != dq_objective(dq, mask | (limit))) identity_ok = false;
        }
      } catch (const Error&) {
        identity_ok = false;
      }
      record(report, identity_ok, "f-form identity fails on trial " + std::to_string(trial));
    }
    if (with_csv) {
      std::ostringstream row;
      row << trial << ',' << dq.items << ',' << dq.w_total << ',' << (splittable ? 1 : 0) << ','
          << to_fraction_string(search.best);
      report.csv_rows.push_back(row.str());
    }
  }
  return report;
}

}  // namespace abmp
