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
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "isingbench/model.hpp"
#include "isingbench/random.hpp"
#include "isingbench/topology.hpp"

namespace isingbench {

// Finite table of (value, probability) pairs. Zero-probability entries are
// kept so a table serializes exactly as it was written.
struct DiscreteTable {
  std::vector<std::pair<double, double>> entries;
};

struct UniformLaw {
  double lo;
  double hi;
};

struct TruncatedNormalLaw {
  double mu;
  double sigma;
  double lo;
  double hi;
};

// Law from which hardware coefficients are drawn.
class CoefficientDistribution {
 public:
  enum class Kind { kDiscreteTable, kUniform, kTruncatedNormal };

  // Validating constructors; throw ParameterError.
  static CoefficientDistribution discrete(
      std::vector<std::pair<double, double>> entries);
  static CoefficientDistribution uniform(double lo, double hi);
  static CoefficientDistribution truncated_normal(double mu, double sigma,
                                                  double lo, double hi);

  Kind kind() const;
  const std::variant<DiscreteTable, UniformLaw, TruncatedNormalLaw>& law() const {
    return law_;
  }

  double mean() const;
  double variance() const;
  double stddev() const;
  // Smallest interval holding all mass (for tables: values with p > 0).
  Interval support() const;
  // Probability assigned to `value` by a discrete table (0 for other kinds).
  double probability_of(double value) const;

  double sample(Rng& rng) const;

  std::string describe() const;

  friend bool operator==(const CoefficientDistribution& a,
                         const CoefficientDistribution& b);

 private:
  explicit CoefficientDistribution(
      std::variant<DiscreteTable, UniformLaw, TruncatedNormalLaw> law)
      : law_(std::move(law)) {}
  std::variant<DiscreteTable, UniformLaw, TruncatedNormalLaw> law_;
};

double sample_coefficient(const CoefficientDistribution& dist, Rng& rng);

struct DistributionPair {
  CoefficientDistribution h;
  CoefficientDistribution j;
};

// Corrupted-bias ferromagnet tables:
//   J: 0 w.p. 0.35, -1 w.p. 0.10, +1 w.p. 0.55
//   h: 0 w.p. 0.15, -1 w.p. 0.85, +1 w.p. 0
DistributionPair cbfm_distributions();

// J ~ U[-1, 1] and h ~ U[-F, F], so sigma_h / sigma_J == F. Requires
// 0 < F <= 4 (the default h range).
DistributionPair uniform_hardness_family(double target_ratio);

// Closed-form ratio of the two laws' standard deviations.
HardnessReport analytic_hardness_ratio(const CoefficientDistribution& h_dist,
                                       const CoefficientDistribution& j_dist);

// Draws one field per node and one coupling per edge. Node i uses substream
// (seed, linear, i) and edge e uses (seed, quadratic, e), so the result is
// independent of evaluation order and thread count. Throws RangeError before
// sampling when a law's support exceeds the model range.
IsingModel generate_instance(GraphPtr graph, const CoefficientDistribution& h_dist,
                             const CoefficientDistribution& j_dist,
                             std::uint64_t seed, Interval h_range = kDefaultHRange,
                             Interval j_range = kDefaultJRange, int threads = 1);

struct ClipResult {
  IsingModel model;
  std::size_t clipped_h = 0;
  std::size_t clipped_j = 0;
  std::size_t clip_count() const { return clipped_h + clipped_j; }
};

// Clamps raw coefficients into the given ranges and builds the model.
ClipResult clip_to_ranges(GraphPtr graph, std::vector<double> h,
                          std::vector<double> j, Interval h_range = kDefaultHRange,
                          Interval j_range = kDefaultJRange);

// Clamps an existing model into new, narrower ranges.
ClipResult clip_to_ranges(const IsingModel& model, Interval h_range,
                          Interval j_range);

}  // namespace isingbench
