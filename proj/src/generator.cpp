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

#include "isingbench/generator.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "isingbench/error.hpp"
#include "isingbench/parallel.hpp"

namespace isingbench {

namespace {

double normal_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

// phi(z) with phi(+-inf) == 0.
double normal_pdf_ext(double z) { return std::isinf(z) ? 0.0 : normal_pdf(z); }
// z * phi(z) with the limits at +-inf.
double z_pdf_ext(double z) { return std::isinf(z) ? 0.0 : z * normal_pdf(z); }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

CoefficientDistribution CoefficientDistribution::discrete(
    std::vector<std::pair<double, double>> entries) {
  if (entries.empty()) throw ParameterError("empty discrete table");
  double total = 0.0;
  for (const auto& [value, p] : entries) {
    if (!std::isfinite(value)) throw ParameterError("non-finite table value");
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ParameterError("table probability outside [0, 1]");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ParameterError("table probabilities sum to " + std::to_string(total) +
                         ", expected 1");
  }
  return CoefficientDistribution(DiscreteTable{std::move(entries)});
}

CoefficientDistribution CoefficientDistribution::uniform(double lo, double hi) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) {
    throw ParameterError("uniform law requires finite lo < hi");
  }
  return CoefficientDistribution(UniformLaw{lo, hi});
}

CoefficientDistribution CoefficientDistribution::truncated_normal(double mu,
                                                                  double sigma,
                                                                  double lo,
                                                                  double hi) {
  if (!(sigma > 0.0) || !std::isfinite(mu) || !(lo < hi)) {
    throw ParameterError("truncated normal requires sigma > 0 and lo < hi");
  }
  if (normal_cdf((hi - mu) / sigma) - normal_cdf((lo - mu) / sigma) <= 0.0) {
    throw ParameterError("truncation interval carries no probability mass");
  }
  return CoefficientDistribution(TruncatedNormalLaw{mu, sigma, lo, hi});
}

CoefficientDistribution::Kind CoefficientDistribution::kind() const {
  return std::visit(Overloaded{
                        [](const DiscreteTable&) { return Kind::kDiscreteTable; },
                        [](const UniformLaw&) { return Kind::kUniform; },
                        [](const TruncatedNormalLaw&) { return Kind::kTruncatedNormal; },
                    },
                    law_);
}

double CoefficientDistribution::mean() const {
  return std::visit(
      Overloaded{
          [](const DiscreteTable& t) {
            double m = 0.0;
            for (const auto& [v, p] : t.entries) m += v * p;
            return m;
          },
          [](const UniformLaw& u) { return 0.5 * (u.lo + u.hi); },
          [](const TruncatedNormalLaw& n) {
            const double a = (n.lo - n.mu) / n.sigma;
            const double b = (n.hi - n.mu) / n.sigma;
            const double z = normal_cdf(b) - normal_cdf(a);
            return n.mu + n.sigma * (normal_pdf_ext(a) - normal_pdf_ext(b)) / z;
          },
      },
      law_);
}

double CoefficientDistribution::variance() const {
  return std::visit(
      Overloaded{
          [](const DiscreteTable& t) {
            double m = 0.0, m2 = 0.0;
            for (const auto& [v, p] : t.entries) {
              m += v * p;
              m2 += v * v * p;
            }
            return std::max(0.0, m2 - m * m);
          },
          [](const UniformLaw& u) { return (u.hi - u.lo) * (u.hi - u.lo) / 12.0; },
          [](const TruncatedNormalLaw& n) {
            const double a = (n.lo - n.mu) / n.sigma;
            const double b = (n.hi - n.mu) / n.sigma;
            const double z = normal_cdf(b) - normal_cdf(a);
            const double pa = normal_pdf_ext(a), pb = normal_pdf_ext(b);
            const double r = (pa - pb) / z;
            return n.sigma * n.sigma * (1.0 + (z_pdf_ext(a) - z_pdf_ext(b)) / z - r * r);
          },
      },
      law_);
}

double CoefficientDistribution::stddev() const { return std::sqrt(variance()); }

Interval CoefficientDistribution::support() const {
  return std::visit(
      Overloaded{
          [](const DiscreteTable& t) {
            Interval s{std::numeric_limits<double>::infinity(),
                       -std::numeric_limits<double>::infinity()};
            for (const auto& [v, p] : t.entries) {
              if (p > 0.0) {
                s.lo = std::min(s.lo, v);
                s.hi = std::max(s.hi, v);
              }
            }
            return s;
          },
          [](const UniformLaw& u) { return Interval{u.lo, u.hi}; },
          [](const TruncatedNormalLaw& n) { return Interval{n.lo, n.hi}; },
      },
      law_);
}

double CoefficientDistribution::probability_of(double value) const {
  if (const auto* t = std::get_if<DiscreteTable>(&law_)) {
    double p = 0.0;
    for (const auto& [v, q] : t->entries) {
      if (v == value) p += q;
    }
    return p;
  }
  return 0.0;
}

double CoefficientDistribution::sample(Rng& rng) const {
  return std::visit(
      Overloaded{
          [&](const DiscreteTable& t) {
            const double u = rng.uniform01();
            double acc = 0.0;
            double last = t.entries.front().first;
            for (const auto& [v, p] : t.entries) {
              if (p <= 0.0) continue;
              acc += p;
              last = v;
              if (u < acc) return v;
            }
            return last;  // round-off when u is within 1e-12 of 1
          },
          [&](const UniformLaw& u) { return rng.uniform(u.lo, u.hi); },
          [&](const TruncatedNormalLaw& n) {
            for (;;) {
              const double x = n.mu + n.sigma * rng.normal();
              if (x >= n.lo && x <= n.hi) return x;
            }
          },
      },
      law_);
}

std::string CoefficientDistribution::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(Overloaded{
                 [&](const DiscreteTable& t) {
                   os << "discrete{";
                   for (std::size_t i = 0; i < t.entries.size(); ++i) {
                     os << (i ? ", " : "") << t.entries[i].first << ": "
                        << t.entries[i].second;
                   }
                   os << "}";
                 },
                 [&](const UniformLaw& u) { os << "uniform[" << u.lo << ", " << u.hi << "]"; },
                 [&](const TruncatedNormalLaw& n) {
                   os << "truncated_normal(" << n.mu << ", " << n.sigma << ", " << n.lo
                      << ", " << n.hi << ")";
                 },
             },
             law_);
  return os.str();
}

bool operator==(const CoefficientDistribution& a, const CoefficientDistribution& b) {
  return std::visit(
      Overloaded{
          [](const DiscreteTable& x, const DiscreteTable& y) { return x.entries == y.entries; },
          [](const UniformLaw& x, const UniformLaw& y) { return x.lo == y.lo && x.hi == y.hi; },
          [](const TruncatedNormalLaw& x, const TruncatedNormalLaw& y) {
            return x.mu == y.mu && x.sigma == y.sigma && x.lo == y.lo && x.hi == y.hi;
          },
          [](const auto&, const auto&) { return false; },
      },
      a.law_, b.law_);
}

double sample_coefficient(const CoefficientDistribution& dist, Rng& rng) {
  return dist.sample(rng);
}

DistributionPair cbfm_distributions() {
  return {CoefficientDistribution::discrete({{0.0, 0.15}, {-1.0, 0.85}, {1.0, 0.0}}),
          CoefficientDistribution::discrete({{0.0, 0.35}, {-1.0, 0.10}, {1.0, 0.55}})};
}

DistributionPair uniform_hardness_family(double target_ratio) {
  if (!(target_ratio > 0.0)) throw ParameterError("hardness ratio must be > 0");
  if (target_ratio > kDefaultHRange.hi) {
    throw RangeError("hardness ratio " + std::to_string(target_ratio) +
                     " needs fields outside h_range [-4, 4]");
  }
  return {CoefficientDistribution::uniform(-target_ratio, target_ratio),
          CoefficientDistribution::uniform(-1.0, 1.0)};
}

HardnessReport analytic_hardness_ratio(const CoefficientDistribution& h_dist,
                                       const CoefficientDistribution& j_dist) {
  HardnessReport report;
  report.mode = HardnessMode::kAnalytic;
  report.sigma_h = h_dist.stddev();
  report.sigma_j = j_dist.stddev();
  if (report.sigma_j > 0.0) report.ratio = report.sigma_h / report.sigma_j;
  return report;
}

namespace {

void check_support(const CoefficientDistribution& dist, Interval range,
                   const char* name) {
  const Interval s = dist.support();
  if (!(range.contains(s.lo) && range.contains(s.hi))) {
    throw RangeError(std::string(name) + " distribution " + dist.describe() +
                     " exceeds the model range");
  }
}

}  // namespace

IsingModel generate_instance(GraphPtr graph, const CoefficientDistribution& h_dist,
                             const CoefficientDistribution& j_dist,
                             std::uint64_t seed, Interval h_range,
                             Interval j_range, int threads) {
  if (!graph) throw ParameterError("generate_instance requires a graph");
  check_support(h_dist, h_range, "h");
  check_support(j_dist, j_range, "J");
  const auto n = static_cast<std::size_t>(graph->num_nodes());
  const auto m = graph->num_edges();
  std::vector<double> h(n), j(m);
  parallel_for(n + m, threads, [&](std::size_t i) {
    if (i < n) {
      Rng rng(seed, streams::kLinear, i);
      h[i] = h_dist.sample(rng);
    } else {
      Rng rng(seed, streams::kQuadratic, i - n);
      j[i - n] = j_dist.sample(rng);
    }
  });
  return IsingModel(std::move(graph), std::move(h), std::move(j), h_range, j_range);
}

ClipResult clip_to_ranges(GraphPtr graph, std::vector<double> h,
                          std::vector<double> j, Interval h_range,
                          Interval j_range) {
  std::size_t ch = 0, cj = 0;
  for (auto& x : h) {
    const double c = h_range.clamp(x);
    if (c != x) ++ch;
    x = c;
  }
  for (auto& x : j) {
    const double c = j_range.clamp(x);
    if (c != x) ++cj;
    x = c;
  }
  return {IsingModel(std::move(graph), std::move(h), std::move(j), h_range, j_range),
          ch, cj};
}

ClipResult clip_to_ranges(const IsingModel& model, Interval h_range,
                          Interval j_range) {
  return clip_to_ranges(model.graph_ptr(), model.h(), model.j(), h_range, j_range);
}

}  // namespace isingbench
