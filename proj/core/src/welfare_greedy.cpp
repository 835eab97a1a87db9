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

#include "abmp/welfare_greedy.hpp"

#include <cmath>
#include <string>

#include "abmp/errors.hpp"
#include "abmp/rng.hpp"

namespace abmp {

GreedyWelfareResult lehmann_greedy(const Instance& inst, const CoverPolicy& policy) {
  inst.validate();
  ColumnTaxonomy tax = taxonomy(inst);
  Cover cover = cover_phase(inst, policy);

  GreedyWelfareResult result;
  result.allocation.n = inst.n;
  result.allocation.row_of.assign(inst.m, inst.n);
  for (auto [i, j] : cover.pairs) result.allocation.row_of[j] = i;

  // After the cover, row i holds beta_i claimed zero-entry mass (none yet)
  // against gamma_i unclaimed 1-entry mass.
  std::vector<Rational> beta(inst.n, Rational(0)), gamma(inst.n, Rational(0));
  for (int i = 0; i < inst.n; ++i) {
    for (int j : cover.leftovers[i]) gamma[i] += inst.p[j];
  }

  for (int j : tax.zero_columns) {
    int best_row = -1;
    Rational best_gain = 0;
    for (int i = 0; i < inst.n; ++i) {
      if (gamma[i] == 0) continue;
      Rational before = beta[i] * gamma[i] / (beta[i] + gamma[i]);
      Rational after = (beta[i] + inst.p[j]) * gamma[i] / (beta[i] + inst.p[j] + gamma[i]);
      Rational gain = after - before;
      if (gain > best_gain) {
        best_gain = gain;
        best_row = i;
      }
    }
    if (best_row >= 0) {
      result.allocation.row_of[j] = best_row;
      beta[best_row] += inst.p[j];
    }
  }

  result.scheme = allocation_to_scheme(inst, result.allocation);
  result.value = welfare_of_allocation(inst, result.allocation);
  return result;
}

namespace {

struct RowSums {
  double alpha = 0, beta = 0, gamma = 0;
};

double row_value(const RowSums& s) {
  double denom = s.beta + s.gamma;
  return s.alpha + (denom > 0 ? s.beta * s.gamma / denom : 0.0);
}

//! Marginal of adding column j to row i given the row's sums without j.
double marginal_given_sums(double p, bool is_one, const RowSums& s) {
  if (is_one) {
    double before = s.beta + s.gamma > 0 ? s.beta * s.gamma / (s.beta + s.gamma) : 0.0;
    double after =
        s.beta + s.gamma - p > 0 ? s.beta * (s.gamma - p) / (s.beta + s.gamma - p) : 0.0;
    return p + after - before;
  }
  double before = s.beta + s.gamma > 0 ? s.beta * s.gamma / (s.beta + s.gamma) : 0.0;
  double after = (s.beta + p) * s.gamma / (s.beta + p + s.gamma);
  return after - before;
}

}  // namespace

ContinuousGreedyResult continuous_greedy(const Instance& inst,
                                         const ContinuousGreedyParams& params) {
  inst.validate();
  if (params.steps < 1 || params.samples < 1 || params.rounding_draws < 1) {
    throw BadParameters("continuous greedy needs steps, samples and draws >= 1");
  }
  const int n = inst.n, m = inst.m;
  std::vector<double> p(m);
  for (int j = 0; j < m; ++j) p[j] = to_double(inst.p[j]);

  std::vector<std::vector<double>> x(n, std::vector<double>(m, 0.0));
  const double step_size = 1.0 / params.steps;

  for (int step = 0; step < params.steps; ++step) {
    // Estimated marginal of raising x[i][j], from `samples` draws of the
    // row's random set without column j.
    std::vector<std::vector<double>> weight(n, std::vector<double>(m, 0.0));
    for (int i = 0; i < n; ++i) {
      const auto& row = inst.a[i];
      for (int j = 0; j < m; ++j) {
        double total = 0;
        for (int k = 0; k < params.samples; ++k) {
          SplitMix64 rng(derive_stream(
              params.seed, {1, static_cast<std::uint64_t>(step), static_cast<std::uint64_t>(i),
                            static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(k)}));
          RowSums sums;
          for (int l = 0; l < m; ++l) {
            bool member = l != j && rng.next_unit() < x[i][l];
            if (row[l] == 1) {
              if (member) {
                sums.alpha += p[l];
              } else {
                sums.gamma += p[l];
              }
            } else if (member) {
              sums.beta += p[l];
            }
          }
          total += marginal_given_sums(p[j], row[j] == 1, sums);
        }
        weight[i][j] = total / params.samples;
      }
    }
    // Best direction in the polytope: one row per column.
    for (int j = 0; j < m; ++j) {
      int best = 0;
      for (int i = 1; i < n; ++i) {
        if (weight[i][j] > weight[best][j]) best = i;
      }
      x[best][j] += step_size;
    }
  }
  for (int j = 0; j < m; ++j) {  // guard against accumulated roundoff
    double sum = 0;
    for (int i = 0; i < n; ++i) sum += x[i][j];
    if (sum > 1.0) {
      for (int i = 0; i < n; ++i) x[i][j] /= sum;
    }
  }

  // Independent per-column rounding; keep the best of several draws under
  // exact re-evaluation.
  ContinuousGreedyResult result;
  result.x = x;
  bool have_best = false;
  for (int d = 0; d < params.rounding_draws; ++d) {
    Allocation alloc;
    alloc.n = n;
    alloc.row_of.assign(m, n);
    for (int j = 0; j < m; ++j) {
      SplitMix64 rng(derive_stream(
          params.seed, {2, static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(j)}));
      double u = rng.next_unit();
      double acc = 0;
      for (int i = 0; i < n; ++i) {
        acc += x[i][j];
        if (u < acc) {
          alloc.row_of[j] = i;
          break;
        }
      }
    }
    Rational value = welfare_of_allocation(inst, alloc);
    if (!have_best || value > result.value) {
      have_best = true;
      result.value = value;
      result.allocation = alloc;
    }
  }
  result.scheme = allocation_to_scheme(inst, result.allocation);
  return result;
}

WelfareEstimate estimate_welfare(const Instance& inst, const std::vector<std::vector<double>>& x,
                                 int samples, std::uint64_t seed) {
  inst.validate();
  if (samples < 1) throw BadParameters("estimate needs at least one sample");
  if (static_cast<int>(x.size()) != inst.n) throw BadParameters("fractional point shape mismatch");
  for (const auto& row : x) {
    if (static_cast<int>(row.size()) != inst.m) {
      throw BadParameters("fractional point shape mismatch");
    }
  }
  std::vector<double> p(inst.m);
  for (int j = 0; j < inst.m; ++j) p[j] = to_double(inst.p[j]);

  double sum = 0, sum_sq = 0;
  for (int k = 0; k < samples; ++k) {
    double welfare = 0;
    for (int i = 0; i < inst.n; ++i) {
      SplitMix64 rng(derive_stream(
          seed, {3, static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(i)}));
      RowSums sums;
      for (int j = 0; j < inst.m; ++j) {
        bool member = rng.next_unit() < x[i][j];
        if (inst.a[i][j] == 1) {
          if (member) {
            sums.alpha += p[j];
          } else {
            sums.gamma += p[j];
          }
        } else if (member) {
          sums.beta += p[j];
        }
      }
      welfare += row_value(sums);
    }
    sum += welfare;
    sum_sq += welfare * welfare;
  }
  WelfareEstimate est;
  est.mean = sum / samples;
  double variance = std::max(0.0, sum_sq / samples - est.mean * est.mean);
  est.stddev = std::sqrt(variance / samples);
  return est;
}

}  // namespace abmp
