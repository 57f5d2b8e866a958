// Copyright 2026 The isingbench Authors
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

#pragma once

#include <cstdint>
#include <limits>

namespace isingbench {

// One step of the SplitMix64 sequence; also used as a 64-bit mixing function.
std::uint64_t splitmix64(std::uint64_t& state);

// Stable hash of (seed, stream, index). Every random element of an instance or
// a solver run owns the substream seeded by this value, so results do not
// depend on iteration order or thread count.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                          std::uint64_t index);

// Stream tags for derive_seed.
namespace streams {
inline constexpr std::uint64_t kLinear = 0x6c696e6561720001ULL;
inline constexpr std::uint64_t kQuadratic = 0x7175616472000002ULL;
inline constexpr std::uint64_t kRead = 0x7265616400000003ULL;
inline constexpr std::uint64_t kMonteCarlo = 0x6d6f6e7465000004ULL;
inline constexpr std::uint64_t kKnapsack = 0x6b6e617073000005ULL;
inline constexpr std::uint64_t kSolver = 0x736f6c7665000006ULL;
}  // namespace streams

// xoshiro256** generator. Satisfies UniformRandomBitGenerator, but the
// library only draws through the members below so that sequences are
// identical across standard library implementations.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);
  Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
      : Rng(derive_seed(seed, stream, index)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()();

  // Uniform on [0, 1) with 53 random bits.
  double uniform01();
  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  // Uniform integer on [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  // Standard normal deviate (Marsaglia polar method).
  double normal();
  int spin() { return ((*this)() >> 63) ? 1 : -1; }

 private:
  std::uint64_t s_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace isingbench
