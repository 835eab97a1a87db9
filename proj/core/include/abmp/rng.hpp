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

#ifndef ABMP_RNG_HPP_
#define ABMP_RNG_HPP_

#include <cstdint>
#include <initializer_list>

namespace abmp {

//! SplitMix64: a tiny, portable, seedable generator. The output sequence
//! depends only on the seed, never on the platform, which keeps generated
//! instances and sampled runs byte-identical across machines.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  //! Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  //! Uniform in [0, n) without modulo bias (rejection sampling).
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t bound = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t r;
    do {
      r = next();
    } while (r >= bound);
    return r % n;
  }

 private:
  std::uint64_t state_;
};

//! Derives an independent substream key from a base seed and a list of
//! indices (step, row, column, sample, ...). Feeding the result to
//! SplitMix64 gives streams that do not depend on evaluation order.
inline std::uint64_t derive_stream(std::uint64_t seed,
                                   std::initializer_list<std::uint64_t> path) {
  SplitMix64 h(seed ^ 0x6a09e667f3bcc909ULL);
  std::uint64_t key = h.next();
  for (std::uint64_t part : path) {
    SplitMix64 g(key ^ (part + 0x9e3779b97f4a7c15ULL));
    key = g.next();
  }
  return key;
}

}  // namespace abmp

#endif  // ABMP_RNG_HPP_
