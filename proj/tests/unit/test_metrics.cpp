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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "isingbench/error.hpp"
#include "isingbench/metrics.hpp"

namespace isingbench {
namespace {

SampleSet energies(std::initializer_list<std::pair<double, std::int64_t>> list) {
  SampleSet s;
  for (auto [e, c] : list) s.records.push_back({{1}, e, c});
  return s;
}

TEST(Rl, IdentityIsZero) {
  const auto base = energies({{-5, 1}, {-4, 2}});
  const auto best = energies({{-5, 1}});
  const auto r = relative_difference(best, base);
  ASSERT_EQ(r.rl_values.size(), 1u);
  EXPECT_EQ(r.rl_values[0], 0.0);
  EXPECT_EQ(r.baseline_min, -5.0);
}

TEST(Rl, HandComputed) {
  const auto r = relative_difference(energies({{-99, 1}}), energies({{-100, 1}}));
  EXPECT_DOUBLE_EQ(r.rl_values[0], 0.01);
}

TEST(Rl, NegativeWhenCandidateWins) {
  const auto r = relative_difference(energies({{-1001.5, 1}, {-1002, 1}}), energies({{-1000, 1}}));
  for (double v : r.rl_values) {
    EXPECT_GE(v, -0.002);
    EXPECT_LE(v, -0.001);
  }
}

TEST(Rl, CountExpansion) {
  const auto r = relative_difference(energies({{-9, 3}, {-10, 1}}), energies({{-10, 1}}));
  EXPECT_EQ(r.rl_values.size(), 4u);
  EXPECT_EQ(r.stats.count, 4u);
  EXPECT_DOUBLE_EQ(r.stats.max, 0.1);
  EXPECT_DOUBLE_EQ(r.stats.min, 0.0);
}

TEST(Rl, Errors) {
  EXPECT_THROW(relative_difference(energies({{1, 1}}), energies({{0, 1}})), UndefinedMetricError);
  EXPECT_THROW(relative_difference(energies({{1, 1}}), SampleSet{}), ParameterError);
  EXPECT_THROW(relative_difference(SampleSet{}, energies({{1, 1}})), ParameterError);
}

TEST(Rl, TranslationRecomputed) {
  const auto cand = energies({{-7, 1}, {-6.5, 2}});
  const auto base = energies({{-8, 1}, {-7.5, 1}});
  const double c = 3.25;
  const auto shifted = relative_difference(energies({{-7 + c, 1}, {-6.5 + c, 2}}),
                                           energies({{-8 + c, 1}, {-7.5 + c, 1}}));
  const double m = -8 + c;
  EXPECT_EQ(shifted.rl_values[0], (-7 + c - m) / std::abs(m));
  EXPECT_EQ(shifted.rl_values[1], (-6.5 + c - m) / std::abs(m));
  EXPECT_NE(shifted.rl_values[0], relative_difference(cand, base).rl_values[0]);
}

TEST(Summary, Quartiles) {
  const std::vector<double> v{5, 1, 4, 2, 3};
  const auto s = summary_stats(v);
  EXPECT_EQ(s.median, 3);
  EXPECT_EQ(s.q1, 2);
  EXPECT_EQ(s.q3, 4);
  EXPECT_EQ(s.mean, 3);
  EXPECT_EQ(s.min, 1);
  EXPECT_EQ(s.max, 5);
}

TEST(Summary, InclusiveInterpolation) {
  const std::vector<double> sorted{1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(quantile_sorted(sorted, 0.25), 1.75);
  EXPECT_DOUBLE_EQ(quantile_sorted(sorted, 0.5), 2.5);
}

TEST(Summary, SingleValueAndEmpty) {
  const std::vector<double> one{7};
  const auto s = summary_stats(one);
  for (double v : {s.min, s.q1, s.median, s.mean, s.q3, s.max}) EXPECT_EQ(v, 7);
  EXPECT_THROW(summary_stats(std::vector<double>{}), ParameterError);
}

TEST(Summary, UniformMedian) {
  std::mt19937_64 g(1);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> v(10000);
  for (auto& x : v) x = u(g);
  const auto s = summary_stats(v);
  EXPECT_NEAR(s.median, 0.5, 0.02);
  EXPECT_LE(s.q1, s.median);
  EXPECT_LE(s.median, s.q3);
}

TEST(Consistency, Gaps) {
  std::map<double, SampleSet> groups;
  groups[2.0] = energies({{-10, 1}, {-9, 1}, {-8, 1}});
  groups[1.0] = energies({{-3, 4}});
  groups[3.0] = SampleSet{};
  const auto rep = consistency_report(groups);
  ASSERT_EQ(rep.rows.size(), 2u);
  EXPECT_EQ(rep.rows[0].group_key, 1.0);
  EXPECT_EQ(rep.rows[0].mean_gap, 0.0);
  EXPECT_EQ(rep.rows[0].q3_gap, 0.0);
  EXPECT_EQ(rep.rows[0].samples, 4u);
  EXPECT_DOUBLE_EQ(rep.rows[1].mean_gap, 1.0);
  EXPECT_EQ(rep.rows[1].group_min, -10.0);
  EXPECT_EQ(rep.skipped_groups, (std::vector<double>{3.0}));
}

TEST(Consistency, ShiftInvariant) {
  std::map<double, SampleSet> a, b;
  a[1.0] = energies({{-10.5, 2}, {-9.25, 1}, {-8, 3}});
  b[1.0] = energies({{-10.5 + 4, 2}, {-9.25 + 4, 1}, {-8 + 4, 3}});
  const auto ra = consistency_report(a).rows[0], rb = consistency_report(b).rows[0];
  EXPECT_EQ(ra.mean_gap, rb.mean_gap);
  EXPECT_EQ(ra.q1_gap, rb.q1_gap);
  EXPECT_EQ(ra.q3_gap, rb.q3_gap);
}

// Two solvers on the same instances, recomputed by hand from the records.
TEST(Consistency, HandTable) {
  std::map<double, SampleSet> sa, qa;
  sa[0.5] = energies({{-20, 1}, {-19, 2}, {-17, 1}});
  qa[0.5] = energies({{-20, 3}, {-18, 1}});
  const auto rs = consistency_report(sa).rows[0];
  const auto rq = consistency_report(qa).rows[0];
  // SA gaps {0, 1, 1, 3}: mean 1.25, q1 0.75, q3 1.5.
  EXPECT_DOUBLE_EQ(rs.mean_gap, 1.25);
  EXPECT_DOUBLE_EQ(rs.q1_gap, 0.75);
  EXPECT_DOUBLE_EQ(rs.q3_gap, 1.5);
  // QA gaps {0, 0, 0, 2}: mean 0.5, q1 0, q3 0.5.
  EXPECT_DOUBLE_EQ(rq.mean_gap, 0.5);
  EXPECT_DOUBLE_EQ(rq.q1_gap, 0.0);
  EXPECT_DOUBLE_EQ(rq.q3_gap, 0.5);
}

}  // namespace
}  // namespace isingbench
