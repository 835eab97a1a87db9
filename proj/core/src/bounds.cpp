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

#include "abmp/bounds.hpp"

#include <cmath>

#include "abmp/errors.hpp"
#include "abmp/uniform_greedy.hpp"

namespace abmp {

namespace {

Rational nine_tenths_bound(const Rational& r, const Rational& rho) {
  return Rational(9, 10) * (rho + r) / (rho + 1);
}

Rational rat(long long v) { return Rational(static_cast<long>(v)); }

Rational objective_coeff(long long k) { return make_rational(k, k + 1); }

void check_params(const Rational& r, const Rational& rho, long long s) {
  if (r < 0 || r > 1) throw DomainError("r must lie in [0, 1]");
  if (rho < 0) throw DomainError("rho must be nonnegative");
  if (s < 1) throw DomainError("s must be a positive integer");
}

}  // namespace

Rational opt_upper_bound(const Rational& r, const Rational& rho) {
  if (r < 0 || r > 1) throw DomainError("r must lie in [0, 1]");
  if (rho < 0) throw DomainError("rho must be nonnegative");
  return r + (1 - r) * rho / (rho + 1);
}

LpSolution lp_solve(const Rational& r, const Rational& rho, long long s) {
  check_params(r, rho, s);
  const Rational mass = 1 - r;              // sum of theta
  const Rational need = rho * (1 - r) - r;  // lower bound on sum k theta_k

  if (mass == 0) {
    // theta must vanish entirely; feasible iff the requirement is <= 0.
    if (need > 0) throw Infeasible("no mass available but appearances required");
    return {Rational(0), {}};
  }
  if (rat(3 * s) * mass < need) {
    throw Infeasible("even theta_{3s} = 1-r cannot reach the appearance bound");
  }

  bool have = false;
  LpSolution best;
  auto consider = [&](const Rational& value, std::vector<std::pair<long long, Rational>> theta) {
    if (!have || value < best.value) {
      have = true;
      best.value = value;
      best.theta = std::move(theta);
    }
  };

  // Vertices with one nonzero coordinate (appearance constraint slack).
  for (long long k = s; k <= 3 * s; ++k) {
    if (rat(k) * mass >= need) {
      consider(objective_coeff(k) * mass, {{k, mass}});
    }
  }
  // Vertices with two nonzero coordinates and the appearance constraint
  // tight: theta_a + theta_b = mass, a theta_a + b theta_b = need.
  for (long long a = s; a <= 3 * s; ++a) {
    for (long long b = a + 1; b <= 3 * s; ++b) {
      Rational tb = (need - rat(a) * mass) / rat(b - a);
      Rational ta = mass - tb;
      if (ta < 0 || tb < 0) continue;
      consider(objective_coeff(a) * ta + objective_coeff(b) * tb, {{a, ta}, {b, tb}});
    }
  }
  return best;
}

DualVertices dual_vertices(const Rational& r, const Rational& rho, long long s) {
  check_params(r, rho, s);
  DualVertices v;
  v.d1.alpha = make_rational(s, s + 1);
  v.d1.beta = 0;
  v.d2.alpha = make_rational(3 * s * s, (s + 1) * (3 * s + 1));
  v.d2.beta = make_rational(1, (s + 1) * (3 * s + 1));

  const Rational coeff = rho * (1 - r) - r;
  for (DualPoint* pt : {&v.d1, &v.d2}) {
    pt->feasible = true;
    for (long long k = s; k <= 3 * s; ++k) {
      if (rat(k) * pt->beta + pt->alpha > objective_coeff(k)) {
        pt->feasible = false;
        break;
      }
    }
    pt->objective = (1 - r) * pt->alpha + coeff * pt->beta;
  }
  return v;
}

BoundReport bound_report(const Rational& r, const Rational& rho, long long s) {
  BoundReport report;
  report.r = r;
  report.rho = rho;
  report.s = s;
  DualVertices v = dual_vertices(r, rho, s);
  report.d1 = v.d1.objective;
  report.d2 = v.d2.objective;
  try {
    LpSolution lp = lp_solve(r, rho, s);
    report.feasible = true;
    report.primal = lp.value;
    report.slack = r + lp.value - nine_tenths_bound(r, rho);
  } catch (const Infeasible&) {
    report.feasible = false;
  }
  return report;
}

MasterReport master_inequality(const Rational& r, const Rational& rho, long long s_max) {
  if (rho < 1) throw DomainError("the master inequality assumes rho >= 1");
  MasterReport report;
  report.r = r;
  report.rho = rho;
  report.opt_bound = (rho + r) / (rho + 1);
  report.dual_case = r >= (rho - 1) / rho ? 1 : 2;

  bool have_residual = false;
  for (long long s = 1; s <= s_max; ++s) {
    BoundReport point = bound_report(r, rho, s);
    if (point.feasible && (!report.any_feasible || point.primal < report.lp_min)) {
      report.any_feasible = true;
      report.lp_min = point.primal;
      report.best_s = s;
    }
    Rational residual =
        report.dual_case == 1 ? case1_residual(r, rho) : case2_residual(r, rho, s);
    if (!have_residual || residual < report.case_residual) {
      have_residual = true;
      report.case_residual = residual;
    }
  }
  if (report.any_feasible) {
    report.slack = r + report.lp_min - Rational(9, 10) * report.opt_bound;
    report.s_hit_limit = report.best_s == s_max;
  }
  return report;
}

Rational case1_residual(const Rational& r, const Rational& rho) {
  return (1 + r) / 2 - nine_tenths_bound(r, rho);
}

Rational case2_residual(const Rational& r, const Rational& rho, long long s) {
  DualVertices v = dual_vertices(r, rho, s);
  return r + v.d2.objective - nine_tenths_bound(r, rho);
}

Rational case2_residual_closed(const Rational& r, const Rational& rho, long long s) {
  const Rational s2(static_cast<long>(s * s));
  const Rational sq(static_cast<long>(s));
  Rational denom = Rational(10) * (3 * sq + 1) * (sq + 1) * (rho + 1);
  Rational left = (Rational(10) * rho * rho - (-3 * s2 + 36 * sq - 1) * rho + 30 * s2) / denom;
  Rational right =
      (Rational(10) * rho * rho - (40 * sq - 10) * rho + 27 * s2 - 4 * sq + 9) / denom;
  return left - r * right;
}

double small_rho_ratio_floor(long long k) {
  if (k < 1) throw DomainError("k must be a positive integer");
  double kk = static_cast<double>(k);
  double root = std::sqrt(kk * (kk + 1));
  return (1 + root) * (1 + root) / ((kk + 1) * (kk + 2));
}

AuditReport instance_bound_audit(const Instance& inst, const OracleOptions& opts) {
  inst.validate();
  if (!inst.uniform()) throw NotUniform("the bound audit applies to uniform instances");
  AuditReport report;
  ColumnTaxonomy tax = taxonomy(inst);
  if (tax.zero_columns.empty()) {
    report.applicable = false;
    report.note = "no zero-columns: rho undefined, bound vacuous";
    return report;
  }
  OracleResult oracle = brute_force_allocations(inst, opts);
  report.applicable = true;
  report.opt = oracle.value;
  report.r = tax.one_mass;
  report.rho_star = rho(inst, oracle.scheme);
  report.bound = opt_upper_bound(report.r, report.rho_star);
  report.ok = report.opt <= report.bound;
  return report;
}

}  // namespace abmp
