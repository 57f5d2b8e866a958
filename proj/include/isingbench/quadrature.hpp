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

#include <cstddef>
#include <functional>

namespace isingbench {

struct QuadratureConfig {
  double abs_tol = 1e-8;
  double rel_tol = 1e-6;
  int max_depth = 40;
  // Semi-infinite supports are cut at this quantile of the underlying law.
  double tail_quantile = 1.0 - 1e-10;
  // Equal panels the interval is split into before adaptive refinement.
  int initial_panels = 8;
  // Relative accuracy of the integrand values themselves, e.g. when they come
  // from a nested quadrature. Panels whose correction is below it are accepted.
  double noise_rel = 0.0;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
  std::size_t evaluations = 0;
};

// Adaptive Simpson rule with Richardson correction. A panel is accepted when
// |S_left + S_right - S| <= 15 * eps, with eps halved at each level; panels
// that reach max_depth are accepted anyway and mark the result unconverged.
// A panel is also accepted when |S_left + S_right - S| is within noise_rel of
// |S_left| + |S_right|.
// The overall target is max(abs_tol, rel_tol * |coarse estimate|).
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a,
                                  double b, const QuadratureConfig& config = {});

}  // namespace isingbench
