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

#include "isingbench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "isingbench/error.hpp"

namespace isingbench {

double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw ParameterError("quantile of an empty list");
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

SummaryStats summary_stats(std::span<const double> values) {
  if (values.empty()) throw ParameterError("summary of an empty list");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  SummaryStats s;
  s.count = sorted.size();
  s.min = sorted.front();
  s.max = sorted.back();
  s.q1 = quantile_sorted(sorted, 0.25);
  s.median = quantile_sorted(sorted, 0.5);
  s.q3 = quantile_sorted(sorted, 0.75);
  s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(s.count);
  // Summation round-off must not push the mean outside the data.
  s.mean = std::clamp(s.mean, s.min, s.max);
  return s;
}

RlSummary relative_difference(const SampleSet& candidate, const SampleSet& baseline) {
  if (baseline.records.empty()) throw ParameterError("empty baseline sample set");
  if (candidate.records.empty()) throw ParameterError("empty candidate sample set");
  const double base = baseline.min_energy();
  if (base == 0.0) {
    throw UndefinedMetricError("relative difference undefined: baseline minimum energy is 0");
  }
  RlSummary out;
  out.baseline_min = base;
  const double scale = std::abs(base);
  for (const auto& r : candidate.records) {
    const double rl = (r.energy - base) / scale;
    out.rl_values.insert(out.rl_values.end(), r.count, rl);
  }
  out.stats = summary_stats(out.rl_values);
  return out;
}

ConsistencyReport consistency_report(const std::map<double, SampleSet>& groups) {
  ConsistencyReport report;
  for (const auto& [key, samples] : groups) {
    if (samples.records.empty()) {
      report.skipped_groups.push_back(key);
      continue;
    }
    const double group_min = samples.min_energy();
    std::vector<double> gaps;
    gaps.reserve(static_cast<std::size_t>(samples.total_count()));
    for (const auto& r : samples.records) gaps.insert(gaps.end(), r.count, r.energy - group_min);
    const auto s = summary_stats(gaps);
    report.rows.push_back({key, group_min, s.mean, s.q1, s.q3, s.count});
  }
  return report;
}

}  // namespace isingbench
