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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isingbench/topology.hpp"

namespace isingbench {

// Closed real interval. Unbounded ends are +-infinity.
struct Interval {
  double lo;
  double hi;

  bool contains(double x) const { return x >= lo && x <= hi; }
  double clamp(double x) const { return x < lo ? lo : (x > hi ? hi : x); }
  static Interval unbounded() {
    return {-std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Default programmable ranges of current annealers.
inline constexpr Interval kDefaultHRange{-4.0, 4.0};
inline constexpr Interval kDefaultJRange{-1.0, 1.0};

// Classical spin configuration, one entry in {-1, +1} per node.
class SpinState {
 public:
  SpinState() = default;
  explicit SpinState(std::vector<std::int8_t> spins);
  // All spins +1.
  static SpinState all_up(int n) {
    return SpinState(std::vector<std::int8_t>(n, 1));
  }

  std::size_t size() const { return spins_.size(); }
  int operator[](std::size_t i) const { return spins_[i]; }
  const std::vector<std::int8_t>& values() const { return spins_; }

  friend bool operator==(const SpinState&, const SpinState&) = default;

 private:
  std::vector<std::int8_t> spins_;
};

// Ising model over a hardware graph: one field per node and one coupling per
// edge, indexed like graph().edges().
class IsingModel {
 public:
  IsingModel() = default;
  // Throws DimensionError on size mismatch and RangeError when a coefficient
  // lies outside its range.
  IsingModel(GraphPtr graph, std::vector<double> h, std::vector<double> j,
             Interval h_range = kDefaultHRange,
             Interval j_range = kDefaultJRange);

  // Zero-coefficient model on `graph`.
  static IsingModel zeros(GraphPtr graph, Interval h_range = kDefaultHRange,
                          Interval j_range = kDefaultJRange);

  const HardwareGraph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  int num_nodes() const { return graph_ ? graph_->num_nodes() : 0; }
  const std::vector<double>& h() const { return h_; }
  const std::vector<double>& j() const { return j_; }
  Interval h_range() const { return h_range_; }
  Interval j_range() const { return j_range_; }

  // Coupling on edge {u, v}; 0 when there is no such edge.
  double coupling(int u, int v) const;

  // Same structure with every coefficient multiplied by the given factors.
  // The ranges are widened if needed.
  IsingModel scaled(double h_factor, double j_factor) const;

 private:
  GraphPtr graph_;
  std::vector<double> h_;
  std::vector<double> j_;
  Interval h_range_ = kDefaultHRange;
  Interval j_range_ = kDefaultJRange;
};

// sum_i h_i s_i + sum_{(i,j) in E} J_ij s_i s_j, one term per undirected edge.
double ising_energy(const IsingModel& model, const SpinState& state);
double ising_energy(const IsingModel& model, std::span<const std::int8_t> spins);

// Quadratic pseudo-Boolean objective
//   offset + sum_i q_i x_i + sum_{i<j} q_ij x_i x_j.
class Qubo {
 public:
  explicit Qubo(int n = 0) : linear_(n, 0.0) {}

  int num_variables() const { return static_cast<int>(linear_.size()); }
  const std::vector<double>& linear() const { return linear_; }
  const std::map<std::pair<int, int>, double>& quadratic() const {
    return quadratic_;
  }
  double offset() const { return offset_; }

  void set_linear(int i, double value);
  void add_linear(int i, double value);
  // Pair order does not matter; i == j folds into the linear term because
  // x^2 = x for binary x.
  void add_quadratic(int i, int j, double value);
  void set_offset(double value) { offset_ = value; }
  void add_offset(double value) { offset_ += value; }
  double quadratic_at(int i, int j) const;

  friend bool operator==(const Qubo&, const Qubo&) = default;

 private:
  void check_index(int i) const;

  std::vector<double> linear_;
  std::map<std::pair<int, int>, double> quadratic_;
  double offset_ = 0.0;
};

// x entries must be 0 or 1.
double qubo_energy(const Qubo& qubo, std::span<const std::int8_t> x);

struct IsingConversion {
  IsingModel model;
  double offset;
};

// Maps x_i = (1 + s_i)/2. The result lives on a custom graph with one node per
// variable and one edge per stored quadratic pair; its ranges are unbounded.
// qubo_energy(x) == ising_energy(s) + offset for every assignment.
IsingConversion qubo_to_ising(const Qubo& qubo);

// Inverse map s_i = 2 x_i - 1: qubo_energy(x) == ising_energy(s).
Qubo ising_to_qubo(const IsingModel& model);

std::vector<std::int8_t> spins_to_binary(std::span<const std::int8_t> spins);
std::vector<std::int8_t> binary_to_spins(std::span<const std::int8_t> bits);

enum class HardnessMode { kEmpirical, kAnalytic };

// Dispersion of linear against quadratic coefficients. `ratio` is empty when
// sigma_j is zero.
struct HardnessReport {
  double sigma_h = 0.0;
  double sigma_j = 0.0;
  std::optional<double> ratio;
  std::size_t h_count = 0;
  std::size_t j_count = 0;
  HardnessMode mode = HardnessMode::kEmpirical;

  bool defined() const { return ratio.has_value(); }
};

// Population standard deviation (divide by N).
double population_stddev(std::span<const double> values);

// Builds a report from explicit coefficient collections. Requires at least two
// values in each collection.
HardnessReport hardness_from_coefficients(std::span<const double> h,
                                          std::span<const double> j);

// Empirical ratio over all node fields and all edge couplings of the model.
HardnessReport hardness_ratio(const IsingModel& model);

// Empirical ratio over the QUBO's n linear and stored quadratic coefficients.
HardnessReport hardness_ratio(const Qubo& qubo);

enum class Vartype { kSpin, kBinary };

struct SampleRecord {
  std::vector<std::int8_t> state;
  double energy = 0.0;
  std::int64_t count = 1;

  friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

// Solver output. Parameters are stored as strings so sets round-trip through
// JSON unchanged.
struct SampleSet {
  Vartype vartype = Vartype::kSpin;
  std::vector<SampleRecord> records;
  std::string solver;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;

  std::int64_t total_count() const;
  // Minimum energy; throws ParameterError when empty.
  double min_energy() const;
  // Energies repeated by count.
  std::vector<double> expanded_energies() const;
  // Merge identical states, summing counts; records sorted by (energy, state).
  SampleSet aggregated() const;

  friend bool operator==(const SampleSet&, const SampleSet&) = default;
};

// Throws Error when a record's energy differs from the model energy of its
// state by more than `tolerance`, a state has the wrong size or illegal
// values, or a count is below one.
void verify_samples(const IsingModel& model, const SampleSet& samples,
                    double tolerance = 1e-9);

}  // namespace isingbench
