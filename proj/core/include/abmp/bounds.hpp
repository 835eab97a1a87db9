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

#ifndef ABMP_BOUNDS_HPP_
#define ABMP_BOUNDS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "abmp/instance.hpp"
#include "abmp/oracle.hpp"
#include "abmp/rational.hpp"

namespace abmp {

//! Upper bound on the optimal partition value of an instance whose
//! one-column mass is r and whose optimal scheme has one-column appearance
//! ratio rho: merging all mixed bundles can only help the zero-columns, so
//! OPT <= r + (1-r) rho / (rho+1).
Rational opt_upper_bound(const Rational& r, const Rational& rho);

//! The worst-case zero-column contribution for parameters (r, rho, s):
//!
//!   minimize   sum_{k=s}^{3s} k/(k+1) theta_k
//!   subject to sum theta_k = 1 - r
//!              sum k theta_k >= rho (1-r) - r,   theta >= 0,
//!
//! where theta_k is the zero-column mass sitting in decomposed bundles
//! with k one-columns.
struct LpSolution {
  Rational value;
  //! The nonzero entries of an optimal theta, as (k, theta_k).
  std::vector<std::pair<long long, Rational>> theta;
};

//! Exact optimum by enumerating basic feasible solutions: with two
//! structural constraints an optimal vertex has at most two nonzero
//! coordinates, so singletons and pairs cover every vertex.
//! Throws Infeasible when even theta_{3s} = 1-r cannot meet the
//! appearance constraint.
LpSolution lp_solve(const Rational& r, const Rational& rho, long long s);

struct DualPoint {
  Rational alpha;
  Rational beta;
  bool feasible = false;
  Rational objective;  // (1-r) alpha + (rho (1-r) - r) beta
};

struct DualVertices {
  DualPoint d1;  // (s/(s+1), 0)
  DualPoint d2;  // (3s^2/((s+1)(3s+1)), 1/((s+1)(3s+1)))
};

//! The two dual vertices used by the 9/10 analysis, with feasibility
//! checked against every constraint k beta + alpha <= k/(k+1), k = s..3s.
DualVertices dual_vertices(const Rational& r, const Rational& rho, long long s);

//! One grid point of the duality certification.
struct BoundReport {
  Rational r, rho;
  long long s = 0;
  bool feasible = false;  // primal feasibility
  Rational primal;        // LP optimum when feasible
  Rational d1, d2;        // dual vertex objectives
  Rational slack;         // r + primal - (9/10)(rho+r)/(rho+1), when feasible
};

BoundReport bound_report(const Rational& r, const Rational& rho, long long s);

//! The 9/10 master inequality at (r, rho):
//!   r + min over integer s in [1, s_max] of LP(r, rho, s)
//!     >= (9/10) (rho + r) / (rho + 1).
struct MasterReport {
  Rational r, rho;
  long long best_s = 0;    // feasible s minimizing the LP value
  bool any_feasible = false;
  Rational lp_min;         // over feasible s
  Rational opt_bound;      // (rho + r) / (rho + 1)
  Rational slack;          // r + lp_min - (9/10) opt_bound
  int dual_case = 0;       // 1 when r >= (rho-1)/rho, else 2
  Rational case_residual;  // min over s of the case's dual-side residual
  bool s_hit_limit = false;
};

MasterReport master_inequality(const Rational& r, const Rational& rho, long long s_max = 10);

//! r + D1(r, rho, s=1) - (9/10)(rho+r)/(rho+1); nonnegative whenever
//! r >= (rho-1)/rho.
Rational case1_residual(const Rational& r, const Rational& rho);

//! r + D2(r, rho, s) - (9/10)(rho+r)/(rho+1), evaluated directly.
Rational case2_residual(const Rational& r, const Rational& rho, long long s);

//! The same residual in its expanded closed form (two quadratics in rho
//! over a common denominator); must agree with case2_residual exactly.
Rational case2_residual_closed(const Rational& r, const Rational& rho, long long s);

//! Worst-case ratio floor of the small-rho branch for floor(1/rho) = k:
//! (1 + sqrt(k (k+1)))^2 / ((k+1) (k+2)); about 0.9714 at k = 1.
double small_rho_ratio_floor(long long k);

//! Checks a concrete uniform instance against the upper bound: computes
//! the exact optimum, the optimal scheme's rho, and OPT <= bound(r, rho).
struct AuditReport {
  bool applicable = false;  // false when the instance has no zero-columns
  std::string note;
  Rational opt;
  Rational r;
  Rational rho_star;
  Rational bound;
  bool ok = false;
};

AuditReport instance_bound_audit(const Instance& inst, const OracleOptions& opts = {});

}  // namespace abmp

#endif  // ABMP_BOUNDS_HPP_
