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

#ifndef ABMP_GENERATORS_HPP_
#define ABMP_GENERATORS_HPP_

#include <cstdint>
#include <string>

#include "abmp/instance.hpp"
#include "abmp/rational.hpp"

namespace abmp {

//! The canonical 3x6 worked example with a uniform distribution; its
//! optimal partition value is 73/90.
Instance example3x6();

//! The 4x4 instance on which the uniform greedy can reach exactly 9/10 of
//! the optimum: two covering rows, two doubly-one rows, two zero-columns.
Instance tight4x4();

//! The 4x4 instance whose full-cover schemes lose a factor approaching 8/9
//! as beta grows: p = (1, 1, 1, beta) / (beta + 3). Requires beta > 2.
Instance eight_ninths(const Rational& beta);

//! The (k+1) x (k+1) instance on which the welfare greedy's 1/2 ratio is
//! tight as k and alpha grow: an identity block, a final all-ones row, a
//! heavy zero-column with p = alpha / (k + alpha). Requires alpha > k.
Instance half_tight(int k, const Rational& alpha);

struct RandomSpec {
  int n = 3;
  int m = 5;
  //! Probability that an entry is 1; exact Bernoulli on the rational.
  Rational density = Rational(1, 2);
  enum class Dist {
    Uniform,          // p_j = 1/m
    RationalWeights,  // p_j = u_j / sum(u), u_j drawn from {1..12}
  };
  Dist dist = Dist::Uniform;
  std::uint64_t seed = 0;
};

//! Seeded random instance; identical specs give identical instances on
//! every platform. All-zero matrices are redrawn (the degenerate case adds
//! nothing and would dominate small draws); a density of zero is rejected.
Instance random_instance(const RandomSpec& spec);

struct GeneratorSpec {
  enum class Kind { Example3x6, Tight4x4, EightNinths, HalfTight, Random };
  Kind kind = Kind::Example3x6;
  Rational beta;   // EightNinths
  int k = 0;       // HalfTight
  Rational alpha;  // HalfTight
  RandomSpec random;
};

//! A reproducible family of random instances indexed 0, 1, 2, ... with
//! dimensions and densities varying across the family.
struct FamilySpec {
  int n_min = 2, n_max = 4;
  int m_min = 2, m_max = 7;
  enum class ProbModel { Uniform, Rational, Alternate };
  ProbModel model = ProbModel::Uniform;
  std::uint64_t seed = 0;
};

Instance draw_from_family(const FamilySpec& family, std::uint64_t index);

Instance generate(const GeneratorSpec& spec);

//! Short stable identifier used in CSV output, e.g. "eight-ninths(b=6/1)".
std::string instance_id(const GeneratorSpec& spec);

}  // namespace abmp

#endif  // ABMP_GENERATORS_HPP_
