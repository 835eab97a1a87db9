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

#include "abmp/generators.hpp"

#include <string>

#include "abmp/errors.hpp"
#include "abmp/rng.hpp"

namespace abmp {

namespace {

Instance from_rows(std::vector<std::vector<int>> rows, std::vector<Rational> p) {
  Instance inst;
  inst.n = static_cast<int>(rows.size());
  inst.m = static_cast<int>(rows.front().size());
  inst.a = std::move(rows);
  inst.p = std::move(p);
  inst.validate();
  return inst;
}

}  // namespace

Instance example3x6() {
  return from_rows({{0, 1, 1, 0, 1, 0},  //
                    {0, 1, 1, 0, 1, 0},
                    {0, 1, 1, 0, 0, 0}},
                   std::vector<Rational>(6, Rational(1, 6)));
}

Instance tight4x4() {
  return from_rows({{1, 0, 0, 0},  //
                    {0, 1, 0, 0},
                    {1, 1, 0, 0},
                    {1, 1, 0, 0}},
                   std::vector<Rational>(4, Rational(1, 4)));
}

Instance eight_ninths(const Rational& beta) {
  if (beta <= 2) throw BadParameters("eight-ninths requires beta > 2");
  Rational denom = beta + 3;
  std::vector<Rational> p{1 / denom, 1 / denom, 1 / denom, beta / denom};
  return from_rows({{1, 0, 0, 0},  //
                    {0, 1, 0, 0},
                    {0, 1, 0, 0},
                    {1, 0, 1, 0}},
                   std::move(p));
}

Instance half_tight(int k, const Rational& alpha) {
  if (k < 1) throw BadParameters("half-tight requires k >= 1");
  if (alpha <= k) throw BadParameters("half-tight requires alpha > k");
  std::vector<std::vector<int>> rows(k + 1, std::vector<int>(k + 1, 0));
  for (int i = 0; i < k; ++i) rows[i][i] = 1;
  for (int j = 0; j < k; ++j) rows[k][j] = 1;
  Rational denom = alpha + k;
  std::vector<Rational> p(k + 1, 1 / denom);
  p[k] = alpha / denom;
  return from_rows(std::move(rows), std::move(p));
}

Instance random_instance(const RandomSpec& spec) {
  if (spec.n < 1 || spec.m < 1) throw BadParameters("random instance needs n, m >= 1");
  if (spec.density <= 0 || spec.density > 1) {
    throw BadParameters("density must lie in (0, 1]");
  }
  const long num = mpz_get_si(spec.density.get_num().get_mpz_t());
  const long den = mpz_get_si(spec.density.get_den().get_mpz_t());
  if (den > (1L << 30)) throw BadParameters("density denominator too large");

  SplitMix64 rng(derive_stream(spec.seed, {0x9e11, static_cast<std::uint64_t>(spec.n),
                                           static_cast<std::uint64_t>(spec.m)}));
  Instance inst;
  inst.n = spec.n;
  inst.m = spec.m;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    inst.a.assign(spec.n, std::vector<int>(spec.m, 0));
    bool any_one = false;
    for (int i = 0; i < spec.n; ++i) {
      for (int j = 0; j < spec.m; ++j) {
        // Exact Bernoulli(num/den).
        if (static_cast<long>(rng.below(den)) < num) {
          inst.a[i][j] = 1;
          any_one = true;
        }
      }
    }
    if (any_one) break;
    if (attempt == 999) throw BadParameters("density too low to draw a non-zero matrix");
  }

  if (spec.dist == RandomSpec::Dist::Uniform) {
    inst.p.assign(spec.m, make_rational(1, spec.m));
  } else {
    std::vector<long long> u(spec.m);
    long long total = 0;
    for (int j = 0; j < spec.m; ++j) {
      u[j] = 1 + static_cast<long long>(rng.below(12));
      total += u[j];
    }
    inst.p.resize(spec.m);
    for (int j = 0; j < spec.m; ++j) inst.p[j] = make_rational(u[j], total);
  }
  inst.validate();
  return inst;
}

Instance draw_from_family(const FamilySpec& family, std::uint64_t index) {
  if (family.n_min < 1 || family.n_min > family.n_max || family.m_min < 1 ||
      family.m_min > family.m_max) {
    throw BadParameters("bad family dimension ranges");
  }
  SplitMix64 rng(derive_stream(family.seed, {0xfa31, index}));
  static const Rational kDensities[] = {Rational(1, 4), Rational(1, 3), Rational(1, 2),
                                        Rational(2, 3)};
  RandomSpec spec;
  spec.n = family.n_min + static_cast<int>(rng.below(family.n_max - family.n_min + 1));
  spec.m = family.m_min + static_cast<int>(rng.below(family.m_max - family.m_min + 1));
  spec.density = kDensities[rng.below(4)];
  switch (family.model) {
    case FamilySpec::ProbModel::Uniform:
      spec.dist = RandomSpec::Dist::Uniform;
      break;
    case FamilySpec::ProbModel::Rational:
      spec.dist = RandomSpec::Dist::RationalWeights;
      break;
    case FamilySpec::ProbModel::Alternate:
      spec.dist = index % 2 == 0 ? RandomSpec::Dist::Uniform : RandomSpec::Dist::RationalWeights;
      break;
  }
  spec.seed = rng.next();
  return random_instance(spec);
}

Instance generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::Example3x6:
      return example3x6();
    case GeneratorSpec::Kind::Tight4x4:
      return tight4x4();
    case GeneratorSpec::Kind::EightNinths:
      return eight_ninths(spec.beta);
    case GeneratorSpec::Kind::HalfTight:
      return half_tight(spec.k, spec.alpha);
    case GeneratorSpec::Kind::Random:
      return random_instance(spec.random);
  }
  throw BadParameters("unknown generator");
}

std::string instance_id(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::Example3x6:
      return "example3x6";
    case GeneratorSpec::Kind::Tight4x4:
      return "tight4x4";
    case GeneratorSpec::Kind::EightNinths:
      return "eight-ninths(b=" + to_fraction_string(spec.beta) + ")";
    case GeneratorSpec::Kind::HalfTight:
      return "half-tight(k=" + std::to_string(spec.k) +
             ",a=" + to_fraction_string(spec.alpha) + ")";
    case GeneratorSpec::Kind::Random: {
      const RandomSpec& r = spec.random;
      return "random(n=" + std::to_string(r.n) + ",m=" + std::to_string(r.m) +
             ",d=" + to_fraction_string(r.density) +
             ",dist=" + (r.dist == RandomSpec::Dist::Uniform ? "uniform" : "rational") +
             ",seed=" + std::to_string(r.seed) + ")";
    }
  }
  return "unknown";
}

}  // namespace abmp
