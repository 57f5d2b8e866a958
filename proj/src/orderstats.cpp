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

#include "isingbench/orderstats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "isingbench/error.hpp"
#include "isingbench/metrics.hpp"
#include "isingbench/parallel.hpp"

namespace isingbench::orderstats {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double phi(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi); }
double big_phi(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }
double big_phi_upper(double z) { return 0.5 * std::erfc(z / std::numbers::sqrt2); }

double power(double base, int k) { return k == 0 ? 1.0 : std::pow(std::max(base, 0.0), k); }

void require_density(const ContinuousDistribution& d) {
  if (d.family() == ContinuousDistribution::Family::kPoint) {
    throw ParameterError("point masses have no density; use monte_carlo_range");
  }
}

void require_n(int n, int minimum) {
  if (n < minimum) {
    throw ParameterError("sample size must be >= " + std::to_string(minimum));
  }
}

QuadratureConfig inner_config(const QuadratureConfig& config) {
  QuadratureConfig inner = config;
  inner.abs_tol *= 1e-2;
  inner.rel_tol *= 1e-2;
  return inner;
}

// For integrals whose integrand is itself a quadrature at inner_config.
QuadratureConfig outer_config(const QuadratureConfig& config) {
  QuadratureConfig outer = config;
  outer.noise_rel = std::max(config.noise_rel, 10.0 * inner_config(config).rel_tol);
  return outer;
}

// Integrates and raises ConvergenceError when the tolerance was missed,
// either here or in a nested integral (flagged through `nested_ok`).
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& config, const char* what, bool nested_ok = true) {
  const auto r = adaptive_simpson(f, a, b, config);
  if (!r.converged || !nested_ok) {
    throw ConvergenceError(std::string(what) + ": quadrature did not reach tolerance", r.value,
                           r.error);
  }
  return r.value;
}

}  // namespace

ContinuousDistribution ContinuousDistribution::uniform(double lo, double hi) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) {
    throw ParameterError("uniform law requires finite lo < hi");
  }
  ContinuousDistribution d;
  d.family_ = Family::kUniform;
  d.params_ = {lo, hi};
  d.support_ = {lo, hi};
  return d;
}

ContinuousDistribution ContinuousDistribution::truncated_normal(double mu, double sigma,
                                                                double lo, double hi) {
  if (!(sigma > 0.0) || !std::isfinite(mu) || !(lo < hi)) {
    throw ParameterError("truncated normal requires sigma > 0 and lo < hi");
  }
  ContinuousDistribution d;
  d.family_ = Family::kTruncatedNormal;
  d.params_ = {mu, sigma, lo, hi};
  d.support_ = {lo, hi};
  const double a = (lo - mu) / sigma, b = (hi - mu) / sigma;
  d.mass_ = a > 0.0 ? big_phi_upper(a) - big_phi_upper(b) : big_phi(b) - big_phi(a);
  if (!(d.mass_ > 0.0)) throw ParameterError("truncation interval carries no mass");
  return d;
}

ContinuousDistribution ContinuousDistribution::exponential(double rate) {
  if (!(rate > 0.0 && std::isfinite(rate))) throw ParameterError("exponential rate must be > 0");
  ContinuousDistribution d;
  d.family_ = Family::kExponential;
  d.params_ = {rate};
  d.support_ = {0.0, kInf};
  return d;
}

ContinuousDistribution ContinuousDistribution::point(double value) {
  if (!std::isfinite(value)) throw ParameterError("point mass must be finite");
  ContinuousDistribution d;
  d.family_ = Family::kPoint;
  d.params_ = {value};
  d.support_ = {value, value};
  return d;
}

double ContinuousDistribution::pdf(double x) const {
  if (x < support_.lo || x > support_.hi) return 0.0;
  switch (family_) {
    case Family::kUniform:
      return 1.0 / (support_.hi - support_.lo);
    case Family::kTruncatedNormal:
      return phi((x - params_[0]) / params_[1]) / (params_[1] * mass_);
    case Family::kExponential:
      return params_[0] * std::exp(-params_[0] * x);
    case Family::kPoint:
      return x == params_[0] ? kInf : 0.0;
  }
  return 0.0;
}

double ContinuousDistribution::cdf(double x) const {
  if (x < support_.lo) return 0.0;
  if (x >= support_.hi) return 1.0;
  switch (family_) {
    case Family::kUniform:
      return (x - support_.lo) / (support_.hi - support_.lo);
    case Family::kTruncatedNormal: {
      const double mu = params_[0], s = params_[1];
      const double a = (support_.lo - mu) / s, z = (x - mu) / s;
      const double v = a > 0.0 ? (big_phi_upper(a) - big_phi_upper(z)) / mass_
                               : (big_phi(z) - big_phi(a)) / mass_;
      return std::clamp(v, 0.0, 1.0);
    }
    case Family::kExponential:
      return -std::expm1(-params_[0] * x);
    case Family::kPoint:
      return 1.0;
  }
  return 0.0;
}

double ContinuousDistribution::sf(double x) const {
  if (x < support_.lo) return 1.0;
  if (x >= support_.hi) return 0.0;
  switch (family_) {
    case Family::kUniform:
      return (support_.hi - x) / (support_.hi - support_.lo);
    case Family::kTruncatedNormal: {
      const double mu = params_[0], s = params_[1];
      const double b = (support_.hi - mu) / s, z = (x - mu) / s;
      const double v = z > 0.0 ? (big_phi_upper(z) - big_phi_upper(b)) / mass_
                               : (big_phi(b) - big_phi(z)) / mass_;
      return std::clamp(v, 0.0, 1.0);
    }
    case Family::kExponential:
      return std::exp(-params_[0] * x);
    case Family::kPoint:
      return 0.0;
  }
  return 0.0;
}

double ContinuousDistribution::mass_between(double a, double b) const {
  if (!(b > a)) return 0.0;
  const double lower = cdf(a);
  return lower > 0.5 ? std::max(0.0, sf(a) - sf(b)) : std::max(0.0, cdf(b) - lower);
}

double ContinuousDistribution::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("quantile level outside [0, 1]");
  switch (family_) {
    case Family::kUniform:
      return support_.lo + p * (support_.hi - support_.lo);
    case Family::kExponential:
      return p >= 1.0 ? kInf : -std::log1p(-p) / params_[0];
    case Family::kPoint:
      return params_[0];
    case Family::kTruncatedNormal:
      break;
  }
  if (p <= 0.0) return support_.lo;
  if (p >= 1.0) return support_.hi;
  const double mu = params_[0], s = params_[1];
  double lo = std::max(support_.lo, mu - 40.0 * s);
  double hi = std::min(support_.hi, mu + 40.0 * s);
  // Bisection on whichever tail function is better conditioned.
  const bool upper = p > 0.5;
  for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(lo) + std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    const bool below = upper ? sf(mid) > 1.0 - p : cdf(mid) < p;
    (below ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double ContinuousDistribution::mean() const {
  switch (family_) {
    case Family::kUniform:
      return 0.5 * (support_.lo + support_.hi);
    case Family::kExponential:
      return 1.0 / params_[0];
    case Family::kPoint:
      return params_[0];
    case Family::kTruncatedNormal: {
      const double mu = params_[0], s = params_[1];
      const double a = (support_.lo - mu) / s, b = (support_.hi - mu) / s;
      const double pa = std::isinf(a) ? 0.0 : phi(a), pb = std::isinf(b) ? 0.0 : phi(b);
      return mu + s * (pa - pb) / mass_;
    }
  }
  return 0.0;
}

double ContinuousDistribution::variance() const {
  switch (family_) {
    case Family::kUniform:
      return std::pow(support_.hi - support_.lo, 2) / 12.0;
    case Family::kExponential:
      return 1.0 / (params_[0] * params_[0]);
    case Family::kPoint:
      return 0.0;
    case Family::kTruncatedNormal: {
      const double mu = params_[0], s = params_[1];
      const double a = (support_.lo - mu) / s, b = (support_.hi - mu) / s;
      const double pa = std::isinf(a) ? 0.0 : phi(a), pb = std::isinf(b) ? 0.0 : phi(b);
      const double apa = std::isinf(a) ? 0.0 : a * pa, bpb = std::isinf(b) ? 0.0 : b * pb;
      const double r = (pa - pb) / mass_;
      return s * s * (1.0 + (apa - bpb) / mass_ - r * r);
    }
  }
  return 0.0;
}

double ContinuousDistribution::sample(Rng& rng) const {
  switch (family_) {
    case Family::kUniform:
      return rng.uniform(support_.lo, support_.hi);
    case Family::kExponential:
      return -std::log1p(-rng.uniform01()) / params_[0];
    case Family::kPoint:
      return params_[0];
    case Family::kTruncatedNormal:
      for (;;) {
        const double x = params_[0] + params_[1] * rng.normal();
        if (x >= support_.lo && x <= support_.hi) return x;
      }
  }
  return 0.0;
}

Interval ContinuousDistribution::effective_support(double tail_quantile) const {
  Interval s = support_;
  if (std::isinf(s.hi)) s.hi = quantile(tail_quantile);
  if (std::isinf(s.lo)) s.lo = quantile(1.0 - tail_quantile);
  return s;
}

std::string ContinuousDistribution::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (family_) {
    case Family::kUniform:
      os << "uniform[" << params_[0] << ", " << params_[1] << "]";
      break;
    case Family::kTruncatedNormal:
      os << "truncated_normal(" << params_[0] << ", " << params_[1] << ", " << params_[2]
         << ", " << params_[3] << ")";
      break;
    case Family::kExponential:
      os << "exponential(" << params_[0] << ")";
      break;
    case Family::kPoint:
      os << "point(" << params_[0] << ")";
      break;
  }
  return os.str();
}

namespace {

std::vector<double> numbers_after(std::string_view text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string field(text.substr(pos, end - pos));
    if (field == "inf" || field == "+inf") {
      out.push_back(kInf);
    } else if (field == "-inf") {
      out.push_back(-kInf);
    } else {
      std::size_t used = 0;
      try {
        out.push_back(std::stod(field, &used));
      } catch (const std::exception&) {
        throw ParseError("invalid number '" + field + "'", 0);
      }
      if (used != field.size()) throw ParseError("invalid number '" + field + "'", 0);
    }
    pos = end + 1;
    if (end == text.size()) break;
  }
  return out;
}

}  // namespace

ContinuousDistribution parse_continuous(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("distribution must look like KIND:PARAMS", 0);
  const auto kind = text.substr(0, colon);
  const auto v = numbers_after(text.substr(colon + 1));
  auto expect = [&](std::size_t count) {
    if (v.size() != count) {
      throw ParseError(std::string(kind) + " takes " + std::to_string(count) + " parameters", 0);
    }
  };
  if (kind == "uniform") {
    expect(2);
    return ContinuousDistribution::uniform(v[0], v[1]);
  }
  if (kind == "truncated_normal") {
    expect(4);
    return ContinuousDistribution::truncated_normal(v[0], v[1], v[2], v[3]);
  }
  if (kind == "exponential") {
    expect(1);
    return ContinuousDistribution::exponential(v[0]);
  }
  if (kind == "point") {
    expect(1);
    return ContinuousDistribution::point(v[0]);
  }
  throw ParseError("unknown distribution kind '" + std::string(kind) + "'", 0);
}

double cdf_max(const ContinuousDistribution& d, int n, double x) {
  require_n(n, 1);
  return power(d.cdf(x), n);
}

double cdf_min(const ContinuousDistribution& d, int n, double x) {
  require_n(n, 1);
  return 1.0 - power(d.sf(x), n);
}

double pdf_min(const ContinuousDistribution& d, int n, double y) {
  require_n(n, 1);
  require_density(d);
  const double p = d.pdf(y);
  if (p == 0.0) return 0.0;
  return n * p * power(d.sf(y), n - 1);
}

double joint_pdf_min_range(const ContinuousDistribution& d, int n, double y, double x) {
  require_n(n, 2);
  require_density(d);
  if (x < 0.0) return 0.0;
  const double p_lo = d.pdf(y);
  if (p_lo == 0.0) return 0.0;
  const double p_hi = d.pdf(y + x);
  if (p_hi == 0.0) return 0.0;
  return static_cast<double>(n) * (n - 1) * p_lo * p_hi * power(d.mass_between(y, y + x), n - 2);
}

double pdf_range(const ContinuousDistribution& d, int n, double x,
                 const QuadratureConfig& config) {
  require_n(n, 2);
  require_density(d);
  if (x < 0.0) return 0.0;
  const Interval s = d.effective_support(config.tail_quantile);
  if (x >= s.hi - s.lo) return 0.0;
  return integrate([&](double y) { return joint_pdf_min_range(d, n, y, x); }, s.lo, s.hi - x,
                   config, "pdf_range");
}

double cdf_range(const ContinuousDistribution& d, int n, double x,
                 const QuadratureConfig& config) {
  require_n(n, 2);
  require_density(d);
  if (x <= 0.0) return 0.0;
  const Interval s = d.effective_support(config.tail_quantile);
  x = std::min(x, s.hi - s.lo);
  const auto inner_cfg = inner_config(config);
  bool nested_ok = true;
  const double factor = static_cast<double>(n) * (n - 1);
  auto outer = [&](double y) {
    const double p_lo = d.pdf(y);
    if (p_lo == 0.0) return 0.0;
    const double top = std::min(y + x, s.hi);
    const auto r = adaptive_simpson(
        [&](double z) { return d.pdf(z) * power(d.mass_between(y, z), n - 2); }, y, top,
        inner_cfg);
    nested_ok = nested_ok && r.converged;
    return factor * p_lo * r.value;
  };
  // The inner upper limit switches from y + x to the support end at y = hi - x.
  const double kink = s.hi - x;
  const auto outer_cfg = outer_config(config);
  double total = integrate(outer, s.lo, kink, outer_cfg, "cdf_range");
  total += integrate(outer, kink, s.hi, outer_cfg, "cdf_range");
  if (!nested_ok) {
    throw ConvergenceError("cdf_range: inner quadrature did not reach tolerance", total, 0.0);
  }
  return std::clamp(total, 0.0, 1.0);
}

namespace {

struct ScaledLimits {
  double x_lo;  // z / c_hi
  double x_hi;  // min(z / c_lo, range span)
};

ScaledLimits scaled_limits(const ContinuousDistribution& w, const ContinuousDistribution& c,
                           double z, const QuadratureConfig& config) {
  const Interval sw = w.effective_support(config.tail_quantile);
  const Interval sc = c.effective_support(config.tail_quantile);
  const double span = sw.hi - sw.lo;
  const double x_lo = std::min(z / sc.hi, span);
  const double x_hi = sc.lo > 0.0 ? std::min(z / sc.lo, span) : span;
  return {x_lo, x_hi};
}

void require_positive_capacity(const ContinuousDistribution& c) {
  require_density(c);
  if (c.support().lo < 0.0) throw ParameterError("capacity law must live on the positive reals");
}

}  // namespace

double pdf_scaled_range(const ContinuousDistribution& w, const ContinuousDistribution& c, int n,
                        double z, const QuadratureConfig& config) {
  require_n(n, 2);
  require_density(w);
  require_positive_capacity(c);
  if (z <= 0.0) return 0.0;
  const auto lim = scaled_limits(w, c, z, config);
  if (!(lim.x_hi > lim.x_lo)) return 0.0;
  const auto inner_cfg = inner_config(config);
  bool nested_ok = true;
  auto integrand = [&](double x) {
    if (x <= 0.0) return 0.0;
    // Inside the limits z / x lies in the capacity support; clamping keeps
    // rounding at the end points from reading a zero density.
    const double pc = c.pdf(std::clamp(z / x, c.support().lo, c.support().hi));
    if (pc == 0.0) return 0.0;
    try {
      return pdf_range(w, n, x, inner_cfg) * pc / x;
    } catch (const ConvergenceError& e) {
      nested_ok = false;
      return e.estimate() * pc / x;
    }
  };
  const double v = integrate(integrand, lim.x_lo, lim.x_hi, outer_config(config), "pdf_scaled_range");
  if (!nested_ok) throw ConvergenceError("pdf_scaled_range: inner quadrature failed", v, 0.0);
  return std::max(v, 0.0);
}

double cdf_scaled_range(const ContinuousDistribution& w, const ContinuousDistribution& c, int n,
                        double z, const QuadratureConfig& config) {
  require_n(n, 2);
  require_density(w);
  require_positive_capacity(c);
  if (z <= 0.0) return 0.0;
  const auto lim = scaled_limits(w, c, z, config);
  const auto inner_cfg = inner_config(config);
  bool nested_ok = true;
  auto range_density = [&](double x) {
    try {
      return pdf_range(w, n, x, inner_cfg);
    } catch (const ConvergenceError& e) {
      nested_ok = false;
      return e.estimate();
    }
  };
  // Below z / c_hi every capacity keeps the product under z.
  const auto outer_cfg = outer_config(config);
  double total = integrate(range_density, 0.0, lim.x_lo, outer_cfg, "cdf_scaled_range");
  total += integrate([&](double x) { return range_density(x) * c.cdf(z / x); }, lim.x_lo,
                     lim.x_hi, outer_cfg, "cdf_scaled_range");
  if (!nested_ok) throw ConvergenceError("cdf_scaled_range: inner quadrature failed", total, 0.0);
  return std::clamp(total, 0.0, 1.0);
}

namespace {

void require_nonnegative(const ContinuousDistribution& w) {
  require_density(w);
  if (w.support().lo < 0.0) {
    throw ParameterError("squared-range laws need weights supported on [0, inf)");
  }
}

}  // namespace

double pdf_min_squared(const ContinuousDistribution& w, int n, double y) {
  require_n(n, 1);
  require_nonnegative(w);
  if (y <= 0.0) return 0.0;
  const double root = std::sqrt(y);
  const double p = w.pdf(root);
  if (p == 0.0) return 0.0;
  return 0.5 / root * n * p * power(w.sf(root), n - 1);
}

double cdf_squared_range(const ContinuousDistribution& w, int n, double x,
                         const QuadratureConfig& config) {
  require_n(n, 2);
  require_nonnegative(w);
  if (x <= 0.0) return 0.0;
  const Interval s = w.effective_support(config.tail_quantile);
  const auto inner_cfg = inner_config(config);
  bool nested_ok = true;
  const double factor = static_cast<double>(n) * (n - 1);
  // y = u^2 (smaller square), z = v^2 (larger square); dy dz = 4 u v du dv
  // cancels the ((x + y) y)^(-1/2) / 4 factor of the squared-variable density.
  auto outer = [&](double u) {
    const double p_lo = w.pdf(u);
    if (p_lo == 0.0) return 0.0;
    const double top = std::min(std::sqrt(u * u + x), s.hi);
    const auto r = adaptive_simpson(
        [&](double v) { return w.pdf(v) * power(w.mass_between(u, v), n - 2); }, u, top,
        inner_cfg);
    nested_ok = nested_ok && r.converged;
    return factor * p_lo * r.value;
  };
  const double hi2 = s.hi * s.hi;
  const auto outer_cfg = outer_config(config);
  double total;
  if (hi2 - x > s.lo * s.lo) {
    const double kink = std::sqrt(hi2 - x);
    total = integrate(outer, s.lo, kink, outer_cfg, "cdf_squared_range") +
            integrate(outer, kink, s.hi, outer_cfg, "cdf_squared_range");
  } else {
    total = integrate(outer, s.lo, s.hi, outer_cfg, "cdf_squared_range");
  }
  if (!nested_ok) {
    throw ConvergenceError("cdf_squared_range: inner quadrature did not reach tolerance", total,
                           0.0);
  }
  return std::clamp(total, 0.0, 1.0);
}

double pdf_squared_range(const ContinuousDistribution& w, int n, double x,
                         const QuadratureConfig& config) {
  require_n(n, 2);
  require_nonnegative(w);
  if (x <= 0.0) return 0.0;
  const Interval s = w.effective_support(config.tail_quantile);
  const double hi2 = s.hi * s.hi;
  if (hi2 - x <= s.lo * s.lo) return 0.0;
  const double factor = static_cast<double>(n) * (n - 1);
  auto integrand = [&](double u) {
    const double v = std::sqrt(u * u + x);
    const double p_lo = w.pdf(u), p_hi = w.pdf(v);
    if (p_lo == 0.0 || p_hi == 0.0) return 0.0;
    return factor * p_lo * p_hi * power(w.mass_between(u, v), n - 2) / (2.0 * v);
  };
  return std::max(0.0, integrate(integrand, s.lo, std::sqrt(hi2 - x), config,
                                 "pdf_squared_range"));
}

std::string_view to_string(RangeMode mode) {
  switch (mode) {
    case RangeMode::kRange:
      return "range";
    case RangeMode::kScaledRange:
      return "scaled_range";
    case RangeMode::kSquaredRange:
      return "squared_range";
  }
  return "range";
}

RangeMode range_mode_from_string(std::string_view name) {
  if (name == "range") return RangeMode::kRange;
  if (name == "scaled_range") return RangeMode::kScaledRange;
  if (name == "squared_range") return RangeMode::kSquaredRange;
  throw ParameterError("unknown mode '" + std::string(name) + "'");
}

std::vector<double> monte_carlo_range(const ContinuousDistribution& w,
                                      const std::optional<ContinuousDistribution>& c, int n,
                                      RangeMode mode, std::size_t samples, std::uint64_t seed) {
  require_n(n, 1);
  if (samples < 1000) throw ParameterError("Monte Carlo needs at least 1000 samples");
  if (mode == RangeMode::kScaledRange && !c) {
    throw ParameterError("scaled_range needs a capacity distribution");
  }
  Rng rng(seed, streams::kMonteCarlo, 0);
  std::vector<double> out(samples);
  for (auto& value : out) {
    double lo = kInf, hi = -kInf;
    for (int i = 0; i < n; ++i) {
      const double x = w.sample(rng);
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    switch (mode) {
      case RangeMode::kRange:
        value = hi - lo;
        break;
      case RangeMode::kScaledRange:
        value = c->sample(rng) * (hi - lo);
        break;
      case RangeMode::kSquaredRange:
        value = hi * hi - lo * lo;
        break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double empirical_cdf(const std::vector<double>& sorted, double x) {
  if (sorted.empty()) return 0.0;
  const auto it = std::upper_bound(sorted.begin(), sorted.end(), x);
  return static_cast<double>(it - sorted.begin()) / static_cast<double>(sorted.size());
}

namespace {

const ContinuousDistribution& capacity_or_throw(const std::optional<ContinuousDistribution>& c) {
  if (!c) throw ParameterError("scaled_range needs a capacity distribution");
  return *c;
}

double statistic_upper_bound(const ContinuousDistribution& w,
                             const std::optional<ContinuousDistribution>& c, RangeMode mode,
                             const QuadratureConfig& config) {
  const Interval s = w.effective_support(config.tail_quantile);
  switch (mode) {
    case RangeMode::kRange:
      return s.hi - s.lo;
    case RangeMode::kScaledRange:
      return capacity_or_throw(c).effective_support(config.tail_quantile).hi * (s.hi - s.lo);
    case RangeMode::kSquaredRange:
      return s.hi * s.hi - s.lo * s.lo;
  }
  return 0.0;
}

}  // namespace

double statistic_cdf(const ContinuousDistribution& w,
                     const std::optional<ContinuousDistribution>& c, int n, RangeMode mode,
                     double x, const QuadratureConfig& config) {
  switch (mode) {
    case RangeMode::kRange:
      return cdf_range(w, n, x, config);
    case RangeMode::kScaledRange:
      return cdf_scaled_range(w, capacity_or_throw(c), n, x, config);
    case RangeMode::kSquaredRange:
      return cdf_squared_range(w, n, x, config);
  }
  return 0.0;
}

double statistic_pdf(const ContinuousDistribution& w,
                     const std::optional<ContinuousDistribution>& c, int n, RangeMode mode,
                     double x, const QuadratureConfig& config) {
  switch (mode) {
    case RangeMode::kRange:
      return pdf_range(w, n, x, config);
    case RangeMode::kScaledRange:
      return pdf_scaled_range(w, capacity_or_throw(c), n, x, config);
    case RangeMode::kSquaredRange:
      return pdf_squared_range(w, n, x, config);
  }
  return 0.0;
}

double statistic_quantile(const ContinuousDistribution& w,
                          const std::optional<ContinuousDistribution>& c, int n, RangeMode mode,
                          double p, const QuadratureConfig& config) {
  if (!(p > 0.0 && p < 1.0)) throw ParameterError("quantile level must lie in (0, 1)");
  double lo = 0.0, hi = statistic_upper_bound(w, c, mode, config);
  while (hi - lo > 1e-7 * hi) {
    const double mid = 0.5 * (lo + hi);
    (statistic_cdf(w, c, n, mode, mid, config) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

TailReport tail_behavior_report(const ContinuousDistribution& w, const ContinuousDistribution& c,
                                int n, const QuadratureConfig& config) {
  TailReport r;
  const std::optional<ContinuousDistribution> cap = c;
  r.scaled_q50 = statistic_quantile(w, cap, n, RangeMode::kScaledRange, 0.5, config);
  r.scaled_q99 = statistic_quantile(w, cap, n, RangeMode::kScaledRange, 0.99, config);
  r.squared_q50 = statistic_quantile(w, cap, n, RangeMode::kSquaredRange, 0.5, config);
  r.squared_q99 = statistic_quantile(w, cap, n, RangeMode::kSquaredRange, 0.99, config);
  r.scaled_range_tail_width = r.scaled_q99 / r.scaled_q50;
  r.squared_range_tail_width = r.squared_q99 / r.squared_q50;
  const double diff = r.squared_range_tail_width - r.scaled_range_tail_width;
  if (std::abs(diff) <= 1e-9 * std::max(r.squared_range_tail_width, r.scaled_range_tail_width)) {
    r.comparison = "equal";
  } else {
    r.comparison = diff > 0.0 ? "squared_wider" : "scaled_wider";
  }
  return r;
}

std::vector<GridRow> evaluate_grid(const ContinuousDistribution& w,
                                   const std::optional<ContinuousDistribution>& c, int n,
                                   RangeMode mode, int points, std::size_t mc_samples,
                                   std::uint64_t seed, const QuadratureConfig& config,
                                   int threads) {
  if (points < 2) throw ParameterError("grid needs at least two points");
  if (mode == RangeMode::kScaledRange) capacity_or_throw(c);
  std::vector<double> draws;
  double x_max;
  if (mc_samples > 0) {
    draws = monte_carlo_range(w, c, n, mode, mc_samples, seed);
    x_max = quantile_sorted(draws, 0.999);
  } else {
    x_max = statistic_upper_bound(w, c, mode, config);
  }
  std::vector<GridRow> rows(points);
  parallel_for(rows.size(), threads, [&](std::size_t i) {
    GridRow& row = rows[i];
    row.x = x_max * static_cast<double>(i) / (points - 1);
    try {
      row.cdf = statistic_cdf(w, c, n, mode, row.x, config);
    } catch (const ConvergenceError& e) {
      row.cdf = e.estimate();
      row.converged = false;
      row.note = e.what();
    }
    try {
      row.pdf = statistic_pdf(w, c, n, mode, row.x, config);
    } catch (const ConvergenceError& e) {
      row.pdf = e.estimate();
      row.converged = false;
      if (row.note.empty()) row.note = e.what();
    }
    if (!draws.empty()) {
      row.mc_cdf = empirical_cdf(draws, row.x);
      row.abs_diff = std::abs(row.cdf - row.mc_cdf);
    }
  });
  return rows;
}

}  // namespace isingbench::orderstats
