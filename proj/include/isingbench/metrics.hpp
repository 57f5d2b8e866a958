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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "isingbench/model.hpp"

namespace isingbench {

struct SummaryStats {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double mean = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  std::size_t count = 0;
};

// Quantile with inclusive linear interpolation: position p*(N-1) between the
// order statistics of `sorted`.
double quantile_sorted(std::span<const double> sorted, double p);

// Throws ParameterError for an empty input.
SummaryStats summary_stats(std::span<const double> values);

struct RlSummary {
  std::vector<double> rl_values;
  SummaryStats stats;
  double baseline_min = 0.0;
};

// (E_candidate - min E_baseline) / |min E_baseline| for every candidate
// sample, repeated by count. Negative values mean the candidate beat the
// baseline's best sample. Throws UndefinedMetricError when the baseline
// minimum is zero and ParameterError when either set is empty.
RlSummary relative_difference(const SampleSet& candidate, const SampleSet& baseline);

struct ConsistencyRow {
  double group_key = 0.0;
  double group_min = 0.0;
  double mean_gap = 0.0;
  double q1_gap = 0.0;
  double q3_gap = 0.0;
  std::size_t samples = 0;
};

struct ConsistencyReport {
  std::vector<ConsistencyRow> rows;  // ascending group_key
  std::vector<double> skipped_groups;
};

// Gap of every (count-expanded) sample energy from its group's minimum.
// Empty groups are skipped and listed.
ConsistencyReport consistency_report(const std::map<double, SampleSet>& groups);

}  // namespace isingbench
