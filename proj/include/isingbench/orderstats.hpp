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
#include <string>
#include <string_view>
#include <vector>

#include "isingbench/model.hpp"
#include "isingbench/quadrature.hpp"
#include "isingbench/random.hpp"

// Distributions of the extremes and of the range of n i.i.d. draws, of the
// range scaled by an independent capacity, and of the range of the squares.
// The (min, max) joint density
//   f(y, y + x) = n (n-1) p(y) p(y+x) (P(y+x) - P(y))^(n-2)
// is integrated numerically; Monte Carlo estimators are provided as an
// independent check.
namespace isingbench::orderstats {

class ContinuousDistribution {
 public:
  enum class Family { kUniform, kTruncatedNormal, kExponential, kPoint };

  static ContinuousDistribution uniform(double lo, double hi);
  // hi may be +infinity and lo may be -infinity.
  static ContinuousDistribution truncated_normal(double mu, double sigma, double lo,
                                                 double hi);
  static ContinuousDistribution exponential(double rate);
  // Point mass. Only usable for sampling; density-based evaluations reject it.
  static ContinuousDistribution point(double value);

  Family family() const { return family_; }
  const std::vector<double>& params() const { return params_; }
  Interval support() const { return support_; }

  double pdf(double x) const;
  double cdf(double x) const;
  // 1 - cdf(x), accurate in the upper tail.
  double sf(double x) const;
  // P(a < X <= b) computed from whichever tail keeps precision.
  double mass_between(double a, double b) const;
  double quantile(double p) const;
  double mean() const;
  double variance() const;
  double sample(Rng& rng) const;

  // Support with infinite ends replaced by the quantiles tail and 1 - tail.
  Interval effective_support(double tail_quantile) const;

  std::string describe() const;

 private:
  Family family_ = Family::kUniform;
  std::vector<double> params_;
  Interval support_{0.0, 1.0};
  double mass_ = 1.0;  // truncated normal: Phi(b) - Phi(a)
};

// "uniform:LO,HI", "truncated_normal:MU,SIGMA,LO,HI" (HI may be "inf"),
// "exponential:RATE", "point:V".
ContinuousDistribution parse_continuous(std::string_view text);

// P(max <= x) = P(x)^n.
double cdf_max(const ContinuousDistribution& d, int n, double x);
// P(min <= x) = 1 - (1 - P(x))^n.
double cdf_min(const ContinuousDistribution& d, int n, double x);
// n p(y) (1 - P(y))^(n-1); zero outside the support.
double pdf_min(const ContinuousDistribution& d, int n, double y);
// Density of (min, range) at (y, x); zero outside the support.
double joint_pdf_min_range(const ContinuousDistribution& d, int n, double y, double x);

// All functions below throw ConvergenceError (with the achieved estimate)
// when quadrature misses its tolerance.

// Density of max - min: integral over y of joint_pdf_min_range(y, x).
double pdf_range(const ContinuousDistribution& d, int n, double x,
                 const QuadratureConfig& config = {});
// P(max - min <= x) by nested quadrature of the joint density over
// min <= z <= min + x.
double cdf_range(const ContinuousDistribution& d, int n, double x,
                 const QuadratureConfig& config = {});

// Density of C (max - min), C independent of the weights and supported on the
// positive reals: integral of pdf_range(x) p_C(z / x) / x.
double pdf_scaled_range(const ContinuousDistribution& w, const ContinuousDistribution& c,
                        int n, double z, const QuadratureConfig& config = {});
// P(C (max - min) <= z) = integral of pdf_range(x) P_C(z / x).
double cdf_scaled_range(const ContinuousDistribution& w, const ContinuousDistribution& c,
                        int n, double z, const QuadratureConfig& config = {});

// Density of the minimum of the squares, w supported on [0, inf):
//   y^(-1/2) / 2 * n p(sqrt y) (1 - P(sqrt y))^(n-1).
double pdf_min_squared(const ContinuousDistribution& w, int n, double y);
// P(max w^2 - min w^2 <= x) for nonnegative weights. The integrable
// singularities of the squared-variable densities are removed by integrating
// over u = sqrt(y), v = sqrt(z).
double cdf_squared_range(const ContinuousDistribution& w, int n, double x,
                         const QuadratureConfig& config = {});
double pdf_squared_range(const ContinuousDistribution& w, int n, double x,
                         const QuadratureConfig& config = {});

enum class RangeMode { kRange, kScaledRange, kSquaredRange };
std::string_view to_string(RangeMode mode);
RangeMode range_mode_from_string(std::string_view name);

// Sorted i.i.d. draws of the requested statistic (an empirical c.d.f.).
// Deterministic in seed. Requires samples >= 1000 and a capacity law for
// kScaledRange.
std::vector<double> monte_carlo_range(const ContinuousDistribution& w,
                                      const std::optional<ContinuousDistribution>& c,
                                      int n, RangeMode mode, std::size_t samples,
                                      std::uint64_t seed);

// Fraction of sorted draws <= x.
double empirical_cdf(const std::vector<double>& sorted, double x);

// Quadrature c.d.f. / p.d.f. of the statistic selected by mode.
double statistic_cdf(const ContinuousDistribution& w,
                     const std::optional<ContinuousDistribution>& c, int n, RangeMode mode,
                     double x, const QuadratureConfig& config = {});
double statistic_pdf(const ContinuousDistribution& w,
                     const std::optional<ContinuousDistribution>& c, int n, RangeMode mode,
                     double x, const QuadratureConfig& config = {});

// Quantile of the statistic by bisection on statistic_cdf.
double statistic_quantile(const ContinuousDistribution& w,
                          const std::optional<ContinuousDistribution>& c, int n,
                          RangeMode mode, double p, const QuadratureConfig& config = {});

struct TailReport {
  double scaled_q50 = 0.0;
  double scaled_q99 = 0.0;
  double squared_q50 = 0.0;
  double squared_q99 = 0.0;
  // q99 / q50 of each statistic.
  double scaled_range_tail_width = 0.0;
  double squared_range_tail_width = 0.0;
  // "squared_wider", "scaled_wider" or "equal".
  std::string comparison;
};

TailReport tail_behavior_report(const ContinuousDistribution& w,
                                const ContinuousDistribution& c, int n,
                                const QuadratureConfig& config = {});

struct GridRow {
  double x = 0.0;
  double cdf = 0.0;
  double pdf = 0.0;
  double mc_cdf = 0.0;
  double abs_diff = 0.0;
  bool converged = true;
  std::string note;
};

// Evaluates the statistic on `points` equally spaced x values spanning
// [0, q_0.999 of the Monte Carlo draws]. mc_samples == 0 skips the
// Monte Carlo column. Convergence failures are recorded per row.
std::vector<GridRow> evaluate_grid(const ContinuousDistribution& w,
                                   const std::optional<ContinuousDistribution>& c, int n,
                                   RangeMode mode, int points, std::size_t mc_samples,
                                   std::uint64_t seed, const QuadratureConfig& config = {},
                                   int threads = 1);

}  // namespace isingbench::orderstats
