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

#include "isingbench/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "isingbench/error.hpp"

namespace isingbench {

namespace {

struct Simpson {
  const std::function<double(double)>& f;
  int max_depth;
  double noise_rel;
  QuadratureResult& result;

  double eval(double x) {
    ++result.evaluations;
    return f(x);
  }

  double recurse(double a, double fa, double m, double fm, double b, double fb,
                 double whole, double eps, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = eval(lm), frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    const bool settled = std::abs(delta) <= 15.0 * eps ||
                         std::abs(delta) <= noise_rel * (std::abs(left) + std::abs(right));
    if (settled || depth >= max_depth || !(m > a && b > m)) {
      if (!settled && depth >= max_depth) result.converged = false;
      result.error += std::abs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    return recurse(a, fa, lm, flm, m, fm, left, 0.5 * eps, depth + 1) +
           recurse(m, fm, rm, frm, b, fb, right, 0.5 * eps, depth + 1);
  }
};

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a,
                                  double b, const QuadratureConfig& config) {
  if (!(config.abs_tol > 0.0) || !(config.rel_tol > 0.0)) {
    throw ParameterError("quadrature tolerances must be > 0");
  }
  QuadratureResult result;
  if (!(b > a)) return result;
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw ParameterError("adaptive_simpson needs a finite interval");
  }
  const int panels = std::max(1, config.initial_panels);
  Simpson rule{f, config.max_depth, config.noise_rel, result};

  const int points = 2 * panels + 1;
  std::vector<double> x(points), fx(points);
  for (int i = 0; i < points; ++i) {
    x[i] = i + 1 == points ? b : a + (b - a) * i / (points - 1);
    fx[i] = rule.eval(x[i]);
  }
  std::vector<double> coarse(panels);
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const int i = 2 * p;
    coarse[p] = (x[i + 2] - x[i]) / 6.0 * (fx[i] + 4.0 * fx[i + 1] + fx[i + 2]);
    total += coarse[p];
  }
  const double target = std::max(config.abs_tol, config.rel_tol * std::abs(total));
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const int i = 2 * p;
    sum += rule.recurse(x[i], fx[i], x[i + 1], fx[i + 1], x[i + 2], fx[i + 2], coarse[p],
                        target / panels, 0);
  }
  result.value = sum;
  return result;
}

}  // namespace isingbench
