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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isingbench/model.hpp"

namespace isingbench {

// 0-1 knapsack: maximize sum p_i x_i subject to sum w_i x_i <= C.
class KnapsackInstance {
 public:
  // Throws ParameterError unless lengths match, n >= 1 and every profit,
  // weight and the capacity are >= 1.
  KnapsackInstance(std::vector<std::int64_t> profits, std::vector<std::int64_t> weights,
                   std::int64_t capacity);

  std::size_t size() const { return profits_.size(); }
  const std::vector<std::int64_t>& profits() const { return profits_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  std::int64_t capacity() const { return capacity_; }
  std::int64_t total_weight() const { return total_weight_; }
  std::int64_t min_weight() const { return min_weight_; }
  std::int64_t max_weight() const { return max_weight_; }
  std::int64_t max_profit() const { return max_profit_; }

  // No item fits: C < min w.
  bool infeasible() const { return capacity_ < min_weight_; }
  // Everything fits: C >= sum w.
  bool trivial() const { return capacity_ >= total_weight_; }

 private:
  std::vector<std::int64_t> profits_;
  std::vector<std::int64_t> weights_;
  std::int64_t capacity_;
  std::int64_t total_weight_ = 0;
  std::int64_t min_weight_ = 0;
  std::int64_t max_weight_ = 0;
  std::int64_t max_profit_ = 0;
};

// Text format: first line n, then n lines "id profit weight", then a line with
// the capacity. Whitespace separated; '#' starts a comment line.
KnapsackInstance parse_kp(std::string_view text);
std::string format_kp(const KnapsackInstance& instance);

// 1 + max_i p_i: one unit of constraint violation always costs more than any
// single item's profit.
double default_lambda(const KnapsackInstance& instance);

// -sum p_i x_i + lambda (sum w_i x_i - C)^2 expanded into
//   offset lambda C^2, linear -p_i + lambda (w_i^2 - 2 C w_i),
//   quadratic 2 lambda w_i w_j for every pair i < j.
Qubo kp_to_qubo(const KnapsackInstance& instance, double lambda);

struct IntegerInterval {
  std::int64_t lo;
  std::int64_t hi;
};

// Spread of the constraint's quadratic and linear coefficient magnitudes,
// without the multiplier or profit terms:
//   r_J = [min w^2, max w^2], r_h = [C min w, C max w].
struct RangeAnalysis {
  IntegerInterval r_j;
  IntegerInterval r_h;
  std::int64_t len_j;
  std::int64_t len_h;
  // C at which len_h first reaches len_j: max w + min w.
  std::int64_t threshold_c;
  bool dominance;  // len_h >= len_j
};

// Requires n >= 2. Exact integer arithmetic; throws ParameterError on
// overflow.
RangeAnalysis coefficient_ranges(const KnapsackInstance& instance);

// Actual extrema of the penalty QUBO's coefficients (profits and lambda
// included), reported next to the simplified ranges above.
struct QuboExtrema {
  double linear_min;
  double linear_max;
  double quadratic_min;
  double quadratic_max;
};
QuboExtrema qubo_extrema(const Qubo& qubo);

struct KpHardness {
  HardnessReport qubo;   // over the QUBO's linear and quadratic coefficients
  HardnessReport ising;  // after converting the QUBO to spins
};

// Requires n >= 2.
KpHardness kp_hardness(const KnapsackInstance& instance, double lambda);

struct KpSolution {
  std::int64_t profit = 0;
  std::vector<std::int8_t> selection;
};

// O(n C) dynamic program. Throws CapacityError when n * C exceeds work_cap.
KpSolution solve_kp_exact(const KnapsackInstance& instance,
                          std::int64_t work_cap = 200'000'000);

struct Histogram {
  std::vector<double> edges;  // bins + 1 ascending edges
  std::vector<std::int64_t> counts;
};

// Equal-width bins over [min, max] of the values; the maximum falls into the
// last bin. All-equal input yields one bin. Throws ParameterError when empty.
Histogram make_histogram(std::span<const double> values, int bins = 50);

struct KpSource {
  std::string name;
  std::string text;
};

struct KpBatchRow {
  std::string name;
  std::size_t n = 0;
  std::int64_t capacity = 0;
  double lambda = 0.0;
  KpHardness hardness;
  bool dominance = false;
};

struct KpBatchFailure {
  std::string name;
  std::string message;
};

struct KpBatchResult {
  std::vector<KpBatchRow> rows;
  std::vector<KpBatchFailure> failures;
  // Histograms of the defined ratios; empty when no ratio is defined.
  std::optional<Histogram> qubo_histogram;
  std::optional<Histogram> ising_histogram;
  std::size_t warning_count() const { return failures.size(); }
};

// Parses and analyses every source. lambda == nullopt uses default_lambda per
// instance. Unparseable sources are listed in failures. Throws ParameterError
// for an empty source list or when nothing parses.
KpBatchResult batch_hardness(const std::vector<KpSource>& sources,
                             std::optional<double> lambda = std::nullopt,
                             int bins = 50, int threads = 1);

struct SyntheticKpConfig {
  std::size_t n = 50;
  double weight_mean = 50.0;
  double weight_sd = 15.0;
  std::int64_t profit_lo = 1;
  std::int64_t profit_hi = 100;
};

// Weights ~ N(mean, sd^2) rounded and clipped to >= 1, profits uniform
// integers in [profit_lo, profit_hi], capacity uniform on the integers
// strictly between max w and sum w. Deterministic in (seed, index).
KnapsackInstance synthetic_kp(const SyntheticKpConfig& config, std::uint64_t seed,
                              std::uint64_t index);

}  // namespace isingbench
