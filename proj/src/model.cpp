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

#include "isingbench/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "isingbench/error.hpp"

namespace isingbench {

SpinState::SpinState(std::vector<std::int8_t> spins) : spins_(std::move(spins)) {
  for (auto s : spins_) {
    if (s != 1 && s != -1) throw ParameterError("spin values must be -1 or +1");
  }
}

IsingModel::IsingModel(GraphPtr graph, std::vector<double> h,
                       std::vector<double> j, Interval h_range,
                       Interval j_range)
    : graph_(std::move(graph)),
      h_(std::move(h)),
      j_(std::move(j)),
      h_range_(h_range),
      j_range_(j_range) {
  if (!graph_) throw ParameterError("model requires a graph");
  if (!(h_range_.lo <= h_range_.hi) || !(j_range_.lo <= j_range_.hi)) {
    throw ParameterError("inverted coefficient range");
  }
  if (h_.size() != static_cast<std::size_t>(graph_->num_nodes())) {
    throw DimensionError("expected " + std::to_string(graph_->num_nodes()) +
                         " fields, got " + std::to_string(h_.size()));
  }
  if (j_.size() != graph_->num_edges()) {
    throw DimensionError("expected " + std::to_string(graph_->num_edges()) +
                         " couplings, got " + std::to_string(j_.size()));
  }
  for (std::size_t i = 0; i < h_.size(); ++i) {
    if (!h_range_.contains(h_[i])) {
      throw RangeError("h[" + std::to_string(i) + "] = " + std::to_string(h_[i]) +
                       " outside h_range");
    }
  }
  for (std::size_t e = 0; e < j_.size(); ++e) {
    if (!j_range_.contains(j_[e])) {
      const auto [u, v] = graph_->edges()[e];
      throw RangeError("J[" + std::to_string(u) + "," + std::to_string(v) +
                       "] = " + std::to_string(j_[e]) + " outside J_range");
    }
  }
}

IsingModel IsingModel::zeros(GraphPtr graph, Interval h_range, Interval j_range) {
  const auto n = static_cast<std::size_t>(graph->num_nodes());
  const auto m = graph->num_edges();
  return IsingModel(std::move(graph), std::vector<double>(n, 0.0),
                    std::vector<double>(m, 0.0), h_range, j_range);
}

double IsingModel::coupling(int u, int v) const {
  const int e = graph_->find_edge(u, v);
  return e < 0 ? 0.0 : j_[e];
}

IsingModel IsingModel::scaled(double h_factor, double j_factor) const {
  auto h = h_;
  auto j = j_;
  for (auto& x : h) x *= h_factor;
  for (auto& x : j) x *= j_factor;
  auto widen = [](Interval r, double f) {
    const double a = r.lo * f, b = r.hi * f;
    return Interval{std::min({r.lo, a, b}), std::max({r.hi, a, b})};
  };
  return IsingModel(graph_, std::move(h), std::move(j), widen(h_range_, h_factor),
                    widen(j_range_, j_factor));
}

double ising_energy(const IsingModel& model, std::span<const std::int8_t> spins) {
  if (spins.size() != static_cast<std::size_t>(model.num_nodes())) {
    throw DimensionError("state has " + std::to_string(spins.size()) +
                         " spins, model has " + std::to_string(model.num_nodes()));
  }
  double energy = 0.0;
  const auto& h = model.h();
  for (std::size_t i = 0; i < h.size(); ++i) energy += h[i] * spins[i];
  const auto& edges = model.graph().edges();
  const auto& j = model.j();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    energy += j[e] * spins[edges[e].first] * spins[edges[e].second];
  }
  return energy;
}

double ising_energy(const IsingModel& model, const SpinState& state) {
  return ising_energy(model, std::span<const std::int8_t>(state.values()));
}

void Qubo::check_index(int i) const {
  if (i < 0 || i >= num_variables()) {
    throw ParameterError("variable index " + std::to_string(i) + " out of range");
  }
}

void Qubo::set_linear(int i, double value) {
  check_index(i);
  linear_[i] = value;
}

void Qubo::add_linear(int i, double value) {
  check_index(i);
  linear_[i] += value;
}

void Qubo::add_quadratic(int i, int j, double value) {
  check_index(i);
  check_index(j);
  if (i == j) {
    linear_[i] += value;
    return;
  }
  quadratic_[{std::min(i, j), std::max(i, j)}] += value;
}

double Qubo::quadratic_at(int i, int j) const {
  auto it = quadratic_.find({std::min(i, j), std::max(i, j)});
  return it == quadratic_.end() ? 0.0 : it->second;
}

double qubo_energy(const Qubo& qubo, std::span<const std::int8_t> x) {
  if (x.size() != static_cast<std::size_t>(qubo.num_variables())) {
    throw DimensionError("assignment has " + std::to_string(x.size()) +
                         " entries, QUBO has " +
                         std::to_string(qubo.num_variables()));
  }
  double energy = qubo.offset();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0 && x[i] != 1) throw ParameterError("binary values must be 0 or 1");
    if (x[i]) energy += qubo.linear()[i];
  }
  for (const auto& [key, value] : qubo.quadratic()) {
    if (x[key.first] && x[key.second]) energy += value;
  }
  return energy;
}

IsingConversion qubo_to_ising(const Qubo& qubo) {
  const int n = qubo.num_variables();
  std::vector<double> h(n, 0.0);
  std::vector<Edge> edges;
  std::vector<double> couplings;
  double offset = qubo.offset();
  for (int i = 0; i < n; ++i) {
    h[i] += 0.5 * qubo.linear()[i];
    offset += 0.5 * qubo.linear()[i];
  }
  edges.reserve(qubo.quadratic().size());
  couplings.reserve(qubo.quadratic().size());
  // std::map iteration order matches HardwareGraph's sorted edge order.
  for (const auto& [key, value] : qubo.quadratic()) {
    const double quarter = 0.25 * value;
    h[key.first] += quarter;
    h[key.second] += quarter;
    offset += quarter;
    edges.push_back(key);
    couplings.push_back(quarter);
  }
  auto graph = std::make_shared<const HardwareGraph>(TopologyFamily::kCustom,
                                                     std::vector<std::int64_t>{},
                                                     n, std::move(edges));
  return {IsingModel(std::move(graph), std::move(h), std::move(couplings),
                     Interval::unbounded(), Interval::unbounded()),
          offset};
}

Qubo ising_to_qubo(const IsingModel& model) {
  Qubo qubo(model.num_nodes());
  double offset = 0.0;
  for (int i = 0; i < model.num_nodes(); ++i) {
    qubo.add_linear(i, 2.0 * model.h()[i]);
    offset -= model.h()[i];
  }
  const auto& edges = model.graph().edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const double j = model.j()[e];
    const auto [u, v] = edges[e];
    qubo.add_quadratic(u, v, 4.0 * j);
    qubo.add_linear(u, -2.0 * j);
    qubo.add_linear(v, -2.0 * j);
    offset += j;
  }
  qubo.set_offset(offset);
  return qubo;
}

std::vector<std::int8_t> spins_to_binary(std::span<const std::int8_t> spins) {
  std::vector<std::int8_t> out(spins.size());
  for (std::size_t i = 0; i < spins.size(); ++i) out[i] = spins[i] > 0 ? 1 : 0;
  return out;
}

std::vector<std::int8_t> binary_to_spins(std::span<const std::int8_t> bits) {
  std::vector<std::int8_t> out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) out[i] = bits[i] ? 1 : -1;
  return out;
}

double population_stddev(std::span<const double> values) {
  if (values.empty()) return 0.0;
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / n);
}

HardnessReport hardness_from_coefficients(std::span<const double> h,
                                          std::span<const double> j) {
  if (h.size() < 2 || j.size() < 2) {
    throw ParameterError(
        "empirical hardness needs at least two linear and two quadratic "
        "coefficients");
  }
  HardnessReport report;
  report.sigma_h = population_stddev(h);
  report.sigma_j = population_stddev(j);
  report.h_count = h.size();
  report.j_count = j.size();
  report.mode = HardnessMode::kEmpirical;
  if (report.sigma_j > 0.0) report.ratio = report.sigma_h / report.sigma_j;
  return report;
}

HardnessReport hardness_ratio(const IsingModel& model) {
  return hardness_from_coefficients(model.h(), model.j());
}

HardnessReport hardness_ratio(const Qubo& qubo) {
  std::vector<double> quadratic;
  quadratic.reserve(qubo.quadratic().size());
  for (const auto& [key, value] : qubo.quadratic()) quadratic.push_back(value);
  return hardness_from_coefficients(qubo.linear(), quadratic);
}

std::int64_t SampleSet::total_count() const {
  std::int64_t total = 0;
  for (const auto& r : records) total += r.count;
  return total;
}

double SampleSet::min_energy() const {
  if (records.empty()) throw ParameterError("empty sample set");
  double best = records.front().energy;
  for (const auto& r : records) best = std::min(best, r.energy);
  return best;
}

std::vector<double> SampleSet::expanded_energies() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(total_count()));
  for (const auto& r : records) out.insert(out.end(), r.count, r.energy);
  return out;
}

SampleSet SampleSet::aggregated() const {
  SampleSet out = *this;
  out.records.clear();
  std::map<std::vector<std::int8_t>, std::size_t> index;
  for (const auto& r : records) {
    auto [it, inserted] = index.emplace(r.state, out.records.size());
    if (inserted) {
      out.records.push_back(r);
    } else {
      out.records[it->second].count += r.count;
    }
  }
  std::sort(out.records.begin(), out.records.end(),
            [](const SampleRecord& a, const SampleRecord& b) {
              if (a.energy != b.energy) return a.energy < b.energy;
              return a.state < b.state;
            });
  return out;
}

void verify_samples(const IsingModel& model, const SampleSet& samples,
                    double tolerance) {
  for (std::size_t r = 0; r < samples.records.size(); ++r) {
    const auto& rec = samples.records[r];
    if (rec.count < 1) {
      throw Error("record " + std::to_string(r) + " has count < 1");
    }
    if (rec.state.size() != static_cast<std::size_t>(model.num_nodes())) {
      throw DimensionError("record " + std::to_string(r) + " has " +
                           std::to_string(rec.state.size()) + " variables, model has " +
                           std::to_string(model.num_nodes()));
    }
    std::vector<std::int8_t> spins;
    if (samples.vartype == Vartype::kBinary) {
      for (auto b : rec.state) {
        if (b != 0 && b != 1) throw Error("record " + std::to_string(r) + " is not binary");
      }
      spins = binary_to_spins(rec.state);
    } else {
      for (auto s : rec.state) {
        if (s != 1 && s != -1) throw Error("record " + std::to_string(r) + " is not a spin state");
      }
      spins = rec.state;
    }
    const double expected = ising_energy(model, spins);
    const double scale = std::max(1.0, std::abs(expected));
    if (!(std::abs(expected - rec.energy) <= tolerance * scale)) {
      throw Error("energy mismatch in record " + std::to_string(r) + ": stored " +
                  std::to_string(rec.energy) + ", recomputed " +
                  std::to_string(expected));
    }
  }
}

}  // namespace isingbench
