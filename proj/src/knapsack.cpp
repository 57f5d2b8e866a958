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

#include "isingbench/knapsack.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "isingbench/error.hpp"
#include "isingbench/parallel.hpp"
#include "isingbench/random.hpp"

namespace isingbench {

KnapsackInstance::KnapsackInstance(std::vector<std::int64_t> profits,
                                   std::vector<std::int64_t> weights,
                                   std::int64_t capacity)
    : profits_(std::move(profits)), weights_(std::move(weights)), capacity_(capacity) {
  if (profits_.size() != weights_.size()) {
    throw ParameterError("profits and weights differ in length");
  }
  if (profits_.empty()) throw ParameterError("knapsack needs at least one item");
  if (capacity_ < 1) throw ParameterError("capacity must be >= 1");
  min_weight_ = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 0; i < profits_.size(); ++i) {
    if (profits_[i] < 1 || weights_[i] < 1) {
      throw ParameterError("profits and weights must be >= 1");
    }
    if (__builtin_add_overflow(total_weight_, weights_[i], &total_weight_)) {
      throw ParameterError("total weight overflows");
    }
    min_weight_ = std::min(min_weight_, weights_[i]);
    max_weight_ = std::max(max_weight_, weights_[i]);
    max_profit_ = std::max(max_profit_, profits_[i]);
  }
}

namespace {

std::vector<std::string_view> fields_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::int64_t to_int(std::string_view field, std::size_t line) {
  std::int64_t value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("expected an integer, got '" + std::string(field) + "'", line);
  }
  return value;
}

}  // namespace

KnapsackInstance parse_kp(std::string_view text) {
  struct Line {
    std::size_t number;
    std::vector<std::string_view> fields;
  };
  std::vector<Line> lines;
  std::size_t pos = 0, number = 0;
  while (pos < text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    ++number;
    std::string_view body = text.substr(pos, eol - pos);
    body = body.substr(0, std::min(body.find('#'), body.size()));
    auto fields = fields_of(body);
    pos = eol + 1;
    if (fields.empty()) continue;
    lines.push_back({number, std::move(fields)});
  }
  if (lines.empty()) throw ParseError("empty knapsack file", 0);
  if (lines[0].fields.size() != 1) {
    throw ParseError("first line must hold the item count", lines[0].number);
  }
  const std::int64_t n = to_int(lines[0].fields[0], lines[0].number);
  if (n < 1) throw ParseError("item count must be >= 1", lines[0].number);
  if (static_cast<std::int64_t>(lines.size()) != n + 2) {
    throw ParseError("expected " + std::to_string(n) + " item lines and a capacity line, found " +
                         std::to_string(lines.size() - 1) + " data lines",
                     lines.back().number);
  }
  std::vector<std::int64_t> profits, weights;
  for (std::int64_t i = 1; i <= n; ++i) {
    const auto& line = lines[i];
    if (line.fields.size() != 3) {
      throw ParseError("item lines need 'id profit weight'", line.number);
    }
    to_int(line.fields[0], line.number);
    profits.push_back(to_int(line.fields[1], line.number));
    weights.push_back(to_int(line.fields[2], line.number));
    if (profits.back() < 1 || weights.back() < 1) {
      throw ParseError("profit and weight must be >= 1", line.number);
    }
  }
  const auto& last = lines.back();
  if (last.fields.size() != 1) throw ParseError("last line must hold the capacity", last.number);
  const std::int64_t capacity = to_int(last.fields[0], last.number);
  if (capacity < 1) throw ParseError("capacity must be >= 1", last.number);
  return KnapsackInstance(std::move(profits), std::move(weights), capacity);
}

std::string format_kp(const KnapsackInstance& instance) {
  std::ostringstream os;
  os << instance.size() << '\n';
  for (std::size_t i = 0; i < instance.size(); ++i) {
    os << i << ' ' << instance.profits()[i] << ' ' << instance.weights()[i] << '\n';
  }
  os << instance.capacity() << '\n';
  return os.str();
}

double default_lambda(const KnapsackInstance& instance) {
  return 1.0 + static_cast<double>(instance.max_profit());
}

Qubo kp_to_qubo(const KnapsackInstance& instance, double lambda) {
  if (!(lambda > 0.0)) throw ParameterError("lambda must be > 0");
  const int n = static_cast<int>(instance.size());
  const double c = static_cast<double>(instance.capacity());
  Qubo qubo(n);
  qubo.set_offset(lambda * c * c);
  for (int i = 0; i < n; ++i) {
    const double w = static_cast<double>(instance.weights()[i]);
    qubo.set_linear(i, -static_cast<double>(instance.profits()[i]) + lambda * (w * w - 2.0 * c * w));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      qubo.add_quadratic(i, j, 2.0 * lambda * static_cast<double>(instance.weights()[i]) *
                                   static_cast<double>(instance.weights()[j]));
    }
  }
  return qubo;
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ParameterError("range arithmetic overflows");
  return r;
}

}  // namespace

RangeAnalysis coefficient_ranges(const KnapsackInstance& instance) {
  if (instance.size() < 2) throw ParameterError("range analysis needs n >= 2");
  const std::int64_t lo = instance.min_weight(), hi = instance.max_weight();
  const std::int64_t c = instance.capacity();
  RangeAnalysis r;
  r.r_j = {checked_mul(lo, lo), checked_mul(hi, hi)};
  r.r_h = {checked_mul(c, lo), checked_mul(c, hi)};
  r.len_j = r.r_j.hi - r.r_j.lo;
  r.len_h = r.r_h.hi - r.r_h.lo;
  r.threshold_c = lo + hi;
  r.dominance = r.len_h >= r.len_j;
  return r;
}

QuboExtrema qubo_extrema(const Qubo& qubo) {
  QuboExtrema e{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
                std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (double q : qubo.linear()) {
    e.linear_min = std::min(e.linear_min, q);
    e.linear_max = std::max(e.linear_max, q);
  }
  for (const auto& [key, q] : qubo.quadratic()) {
    e.quadratic_min = std::min(e.quadratic_min, q);
    e.quadratic_max = std::max(e.quadratic_max, q);
  }
  return e;
}

namespace {

// Like hardness_from_coefficients, but a two-item instance has a single
// quadratic term and still gets a report (with sigma_J = 0, F undefined).
HardnessReport spread_report(std::span<const double> h, std::span<const double> j) {
  HardnessReport r;
  r.sigma_h = population_stddev(h);
  r.sigma_j = population_stddev(j);
  r.h_count = h.size();
  r.j_count = j.size();
  if (r.sigma_j > 0.0) r.ratio = r.sigma_h / r.sigma_j;
  return r;
}

}  // namespace

KpHardness kp_hardness(const KnapsackInstance& instance, double lambda) {
  if (instance.size() < 2) throw ParameterError("hardness needs n >= 2");
  const Qubo qubo = kp_to_qubo(instance, lambda);
  std::vector<double> quad;
  quad.reserve(qubo.quadratic().size());
  for (const auto& [pair, value] : qubo.quadratic()) quad.push_back(value);
  const auto ising = qubo_to_ising(qubo);
  return {spread_report(qubo.linear(), quad), spread_report(ising.model.h(), ising.model.j())};
}

KpSolution solve_kp_exact(const KnapsackInstance& instance, std::int64_t work_cap) {
  const std::size_t n = instance.size();
  KpSolution out;
  out.selection.assign(n, 0);
  if (instance.trivial()) {
    for (std::size_t i = 0; i < n; ++i) {
      out.selection[i] = 1;
      out.profit += instance.profits()[i];
    }
    return out;
  }
  // Capacity beyond the total weight never binds.
  const std::int64_t cap = std::min(instance.capacity(), instance.total_weight());
  if (static_cast<double>(n) * static_cast<double>(cap + 1) > static_cast<double>(work_cap)) {
    throw CapacityError("knapsack DP needs " + std::to_string(n) + " x " +
                        std::to_string(cap + 1) + " cells, above the work cap");
  }
  const auto width = static_cast<std::size_t>(cap + 1);
  std::vector<std::int64_t> best(width, 0);
  std::vector<bool> take(n * width, false);
  for (std::size_t i = 0; i < n; ++i) {
    const auto w = static_cast<std::size_t>(instance.weights()[i]);
    const std::int64_t p = instance.profits()[i];
    for (std::size_t c = width; c-- > w;) {
      const std::int64_t with = best[c - w] + p;
      if (with > best[c]) {
        best[c] = with;
        take[i * width + c] = true;
      }
    }
  }
  out.profit = best[width - 1];
  std::size_t c = width - 1;
  for (std::size_t i = n; i-- > 0;) {
    if (take[i * width + c]) {
      out.selection[i] = 1;
      c -= static_cast<std::size_t>(instance.weights()[i]);
    }
  }
  return out;
}

Histogram make_histogram(std::span<const double> values, int bins) {
  if (values.empty()) throw ParameterError("histogram of an empty list");
  if (bins < 1) throw ParameterError("histogram needs at least one bin");
  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  Histogram h;
  if (*mn == *mx) {
    h.edges = {*mn, *mx};
    h.counts = {static_cast<std::int64_t>(values.size())};
    return h;
  }
  const double lo = *mn, hi = *mx, width = (hi - lo) / bins;
  h.edges.resize(bins + 1);
  for (int b = 0; b <= bins; ++b) h.edges[b] = lo + width * b;
  h.edges.back() = hi;
  h.counts.assign(bins, 0);
  for (double v : values) {
    auto b = static_cast<int>((v - lo) / width);
    b = std::clamp(b, 0, bins - 1);
    ++h.counts[b];
  }
  return h;
}

KpBatchResult batch_hardness(const std::vector<KpSource>& sources,
                             std::optional<double> lambda, int bins, int threads) {
  if (sources.empty()) throw ParameterError("no knapsack sources given");
  struct Slot {
    std::optional<KpBatchRow> row;
    std::optional<std::string> error;
  };
  std::vector<Slot> slots(sources.size());
  parallel_for(sources.size(), threads, [&](std::size_t i) {
    try {
      const auto inst = parse_kp(sources[i].text);
      const double lam = lambda.value_or(default_lambda(inst));
      KpBatchRow row;
      row.name = sources[i].name;
      row.n = inst.size();
      row.capacity = inst.capacity();
      row.lambda = lam;
      row.hardness = kp_hardness(inst, lam);
      row.dominance = coefficient_ranges(inst).dominance;
      slots[i].row = std::move(row);
    } catch (const Error& e) {
      slots[i].error = e.what();
    }
  });
  KpBatchResult out;
  std::vector<double> fq, fi;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].row) {
      const auto& row = *slots[i].row;
      if (row.hardness.qubo.ratio) fq.push_back(*row.hardness.qubo.ratio);
      if (row.hardness.ising.ratio) fi.push_back(*row.hardness.ising.ratio);
      out.rows.push_back(row);
    } else {
      out.failures.push_back({sources[i].name, *slots[i].error});
    }
  }
  if (out.rows.empty()) throw ParameterError("no knapsack source could be parsed");
  if (!fq.empty()) out.qubo_histogram = make_histogram(fq, bins);
  if (!fi.empty()) out.ising_histogram = make_histogram(fi, bins);
  return out;
}

KnapsackInstance synthetic_kp(const SyntheticKpConfig& config, std::uint64_t seed,
                              std::uint64_t index) {
  if (config.n < 1) throw ParameterError("synthetic knapsack needs n >= 1");
  if (config.profit_lo < 1 || config.profit_hi < config.profit_lo) {
    throw ParameterError("invalid profit range");
  }
  Rng rng(seed, streams::kKnapsack, index);
  std::vector<std::int64_t> weights(config.n), profits(config.n);
  for (auto& w : weights) {
    const double x = std::round(config.weight_mean + config.weight_sd * rng.normal());
    w = std::max<std::int64_t>(1, static_cast<std::int64_t>(x));
  }
  const auto span = static_cast<std::uint64_t>(config.profit_hi - config.profit_lo + 1);
  for (auto& p : profits) p = config.profit_lo + static_cast<std::int64_t>(rng.below(span));
  std::int64_t total = 0, wmax = 0;
  for (auto w : weights) {
    total += w;
    wmax = std::max(wmax, w);
  }
  std::int64_t capacity = wmax;
  if (total - wmax >= 2) {
    capacity = wmax + 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(total - wmax - 1)));
  }
  return KnapsackInstance(std::move(profits), std::move(weights), capacity);
}

}  // namespace isingbench
