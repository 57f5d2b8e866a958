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

#include <random>

#include "isingbench/error.hpp"
#include "isingbench/knapsack.hpp"
#include "oracles.hpp"

namespace isingbench {
namespace {

KnapsackInstance tiny() { return KnapsackInstance({1, 2}, {1, 2}, 2); }

KnapsackInstance random_kp(std::mt19937_64& g, int n, int wmax = 30) {
  std::uniform_int_distribution<std::int64_t> p(1, 50), w(1, wmax);
  std::vector<std::int64_t> ps(n), ws(n);
  std::int64_t total = 0;
  for (int i = 0; i < n; ++i) {
    ps[i] = p(g);
    ws[i] = w(g);
    total += ws[i];
  }
  std::uniform_int_distribution<std::int64_t> c(1, total);
  return KnapsackInstance(ps, ws, c(g));
}

// -sum p x + lambda (sum w x - C)^2 evaluated directly.
double objective(const KnapsackInstance& kp, double lambda, const std::vector<std::int8_t>& x) {
  double profit = 0, load = 0;
  for (std::size_t i = 0; i < kp.size(); ++i) {
    profit += kp.profits()[i] * x[i];
    load += kp.weights()[i] * x[i];
  }
  return -profit + lambda * (load - kp.capacity()) * (load - kp.capacity());
}

TEST(ParseKp, Basic) {
  const auto kp = parse_kp("2\n1 1 1\n2 2 2\n2");
  EXPECT_EQ(kp.profits(), (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(kp.weights(), (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(kp.capacity(), 2);
}

TEST(ParseKp, CommentsAndRoundTrip) {
  const auto kp = parse_kp("# test\n3\n0 5 4\n1 6 5 # inline\n2 7 6\n\n10\n");
  EXPECT_EQ(kp.size(), 3u);
  EXPECT_EQ(parse_kp(format_kp(kp)).weights(), kp.weights());
}

TEST(ParseKp, Flags) {
  EXPECT_TRUE(parse_kp("2\n1 3 5\n2 3 6\n4").infeasible());
  EXPECT_TRUE(parse_kp("2\n1 3 5\n2 3 6\n11").trivial());
  EXPECT_FALSE(parse_kp("2\n1 3 5\n2 3 6\n10").trivial());
}

TEST(ParseKp, ErrorsCarryLineNumbers) {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_kp(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("2\n1 1 1\n2 2\n2"), 3u);
  EXPECT_EQ(line_of("2\n1 1 x\n2 2 2\n2"), 2u);
  EXPECT_GT(line_of("3\n1 1 1\n2 2 2\n2"), 0u);
  EXPECT_GT(line_of("2\n1 1 1\n2 2 2\n2\n5"), 0u);
}

TEST(KpToQubo, HandExpansion) {
  const auto q = kp_to_qubo(tiny(), 1.0);
  EXPECT_EQ(q.offset(), 4.0);
  EXPECT_EQ(q.linear(), (std::vector<double>{-4.0, -6.0}));
  EXPECT_EQ(q.quadratic_at(0, 1), 4.0);
  EXPECT_DOUBLE_EQ(qubo_energy(q, std::vector<std::int8_t>{0, 1}), -2.0);
  EXPECT_DOUBLE_EQ(qubo_energy(q, std::vector<std::int8_t>{1, 1}), -2.0);
  EXPECT_THROW(kp_to_qubo(tiny(), 0.0), ParameterError);
}

TEST(KpToQubo, MatchesDirectObjective) {
  std::mt19937_64 g(3);
  for (int rep = 0; rep < 5; ++rep) {
    const auto kp = random_kp(g, 8 + rep);
    const double lambda = default_lambda(kp);
    const auto q = kp_to_qubo(kp, lambda);
    const int n = static_cast<int>(kp.size());
    for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
      const auto x = testing::bits_of(mask, n);
      ASSERT_NEAR(qubo_energy(q, x), objective(kp, lambda, x), 1e-9);
    }
  }
}

TEST(Lambda, Default) { EXPECT_EQ(default_lambda(KnapsackInstance({3, 9, 4}, {1, 1, 1}, 2)), 10.0); }

TEST(Ranges, ThresholdEqualityExample) {
  const auto r = coefficient_ranges(KnapsackInstance({1, 1, 1}, {90, 16, 50}, 106));
  EXPECT_EQ(r.len_h, 106 * 74);
  EXPECT_EQ(r.len_j, 8100 - 256);
  EXPECT_EQ(r.len_h, r.len_j);
  EXPECT_EQ(r.threshold_c, 106);
  EXPECT_TRUE(r.dominance);
  EXPECT_EQ(r.r_j.lo, 256);
  EXPECT_EQ(r.r_h.hi, 106 * 90);
}

TEST(Ranges, ThresholdIsMaxPlusMin) {
  EXPECT_EQ(coefficient_ranges(KnapsackInstance({1, 1, 1}, {2, 3, 7}, 5)).threshold_c, 9);
}

TEST(Ranges, ImplicationAndLinearity) {
  std::mt19937_64 g(11);
  std::uniform_int_distribution<int> n_items(2, 30);
  std::uniform_int_distribution<std::int64_t> w(1, 1000);
  for (int rep = 0; rep < 10000; ++rep) {
    const int n = n_items(g);
    std::vector<std::int64_t> ws(n);
    for (auto& x : ws) x = w(g);
    const auto lo = *std::min_element(ws.begin(), ws.end());
    const auto hi = *std::max_element(ws.begin(), ws.end());
    std::uniform_int_distribution<std::int64_t> c(hi + lo, 3 * (hi + lo));
    const auto r = coefficient_ranges(KnapsackInstance(std::vector<std::int64_t>(n, 1), ws, c(g)));
    ASSERT_GE(r.len_h, r.len_j);
    ASSERT_TRUE(r.dominance);
    const auto r2 = coefficient_ranges(
        KnapsackInstance(std::vector<std::int64_t>(n, 1), ws, r.r_h.hi / hi + 7));
    ASSERT_EQ(r2.len_h - r.len_h, 7 * (hi - lo));
  }
}

TEST(Hardness, TinyInstanceByHand) {
  const auto h = kp_hardness(tiny(), 1.0);
  // QUBO: linear {-4, -6}, one quadratic term.
  EXPECT_DOUBLE_EQ(h.qubo.sigma_h, 1.0);
  EXPECT_EQ(h.qubo.sigma_j, 0.0);
  EXPECT_FALSE(h.qubo.defined());
  // Ising: h = q/2 + sum q_ij/4 = {-1, -2}, J = {1}.
  EXPECT_DOUBLE_EQ(h.ising.sigma_h, 0.5);
  EXPECT_FALSE(h.ising.defined());
}

TEST(Hardness, ThreeItemsByHand) {
  const KnapsackInstance kp({1, 2, 3}, {1, 2, 3}, 3);
  const auto h = kp_hardness(kp, 1.0);
  // linear -p + w^2 - 6w = {-6, -10, -12}; quadratic 2 w_i w_j = {4, 6, 12}.
  const std::vector<double> lin{-6, -10, -12}, quad{4, 6, 12};
  EXPECT_NEAR(h.qubo.sigma_h, population_stddev(lin), 1e-12);
  EXPECT_NEAR(h.qubo.sigma_j, population_stddev(quad), 1e-12);
  // Ising: h_i = q_i/2 + (sum_j q_ij)/4 = {-3+2.5, -5+4, -6+4.5}; J = q/4.
  const std::vector<double> hi{-0.5, -1.0, -1.5}, ji{1.0, 1.5, 3.0};
  EXPECT_NEAR(h.ising.sigma_h, population_stddev(hi), 1e-12);
  EXPECT_NEAR(*h.ising.ratio, population_stddev(hi) / population_stddev(ji), 1e-12);
}

TEST(Hardness, EqualWeightsUndefined) {
  const auto h = kp_hardness(KnapsackInstance({1, 2, 3, 4}, {5, 5, 5, 5}, 11), 2.0);
  EXPECT_FALSE(h.qubo.defined());
}

TEST(Hardness, SyntheticMostlyAboveOne) {
  SyntheticKpConfig cfg;
  int above = 0;
  for (int i = 0; i < 200; ++i) {
    const auto kp = synthetic_kp(cfg, 5, i);
    above += kp_hardness(kp, default_lambda(kp)).ising.ratio.value_or(0) > 1.0;
  }
  EXPECT_GE(above, 190);
}

TEST(SolveKp, Examples) {
  const auto s = solve_kp_exact(tiny());
  EXPECT_EQ(s.profit, 2);
  EXPECT_EQ(s.selection, (std::vector<std::int8_t>{0, 1}));
  const auto all = solve_kp_exact(KnapsackInstance({3, 4}, {2, 2}, 10));
  EXPECT_EQ(all.profit, 7);
  EXPECT_THROW(solve_kp_exact(KnapsackInstance({1, 1}, {1, 1000000}, 999999), 1000), CapacityError);
}

TEST(SolveKp, MatchesSubsetEnumeration) {
  std::mt19937_64 g(7);
  for (int rep = 0; rep < 20; ++rep) {
    const auto kp = random_kp(g, 12);
    std::int64_t best = 0;
    for (std::uint64_t mask = 0; mask < 4096; ++mask) {
      std::int64_t p = 0, w = 0;
      for (int i = 0; i < 12; ++i)
        if (mask >> i & 1) {
          p += kp.profits()[i];
          w += kp.weights()[i];
        }
      if (w <= kp.capacity()) best = std::max(best, p);
    }
    const auto s = solve_kp_exact(kp);
    ASSERT_EQ(s.profit, best);
    std::int64_t load = 0, profit = 0;
    for (int i = 0; i < 12; ++i) {
      load += kp.weights()[i] * s.selection[i];
      profit += kp.profits()[i] * s.selection[i];
    }
    EXPECT_LE(load, kp.capacity());
    EXPECT_EQ(profit, s.profit);
    // The DP optimum bounds every feasible assignment, including the best
    // QUBO assignment that satisfies the constraint.
    const auto q = kp_to_qubo(kp, default_lambda(kp));
    double qbest = 1e300;
    std::uint64_t qarg = 0;
    for (std::uint64_t mask = 0; mask < 4096; ++mask) {
      const double e = qubo_energy(q, testing::bits_of(mask, 12));
      if (e < qbest) {
        qbest = e;
        qarg = mask;
      }
    }
    std::int64_t qload = 0, qprofit = 0;
    for (int i = 0; i < 12; ++i)
      if (qarg >> i & 1) {
        qload += kp.weights()[i];
        qprofit += kp.profits()[i];
      }
    if (qload <= kp.capacity()) EXPECT_LE(qprofit, s.profit);
  }
}

TEST(Histogram, Binning) {
  const std::vector<double> v{0.0, 0.5, 1.0, 1.0};
  const auto h = make_histogram(v, 2);
  EXPECT_EQ(h.edges, (std::vector<double>{0.0, 0.5, 1.0}));
  EXPECT_EQ(h.counts, (std::vector<std::int64_t>{1, 3}));
  const std::vector<double> one{2.5};
  const auto single = make_histogram(one, 50);
  ASSERT_EQ(single.counts.size(), 1u);
  EXPECT_EQ(single.counts[0], 1);
}

TEST(Batch, RowsFailuresAndHistogram) {
  std::vector<KpSource> src;
  for (int i = 0; i < 10; ++i) src.push_back({"kp" + std::to_string(i), format_kp(synthetic_kp({}, 1, i))});
  src.push_back({"broken", "2\n1 1\n"});
  const auto r = batch_hardness(src, 7.0, 20, 3);
  EXPECT_EQ(r.rows.size(), 10u);
  EXPECT_EQ(r.warning_count(), 1u);
  EXPECT_EQ(r.failures[0].name, "broken");
  EXPECT_EQ(r.rows[0].lambda, 7.0);
  ASSERT_TRUE(r.ising_histogram);
  std::int64_t total = 0;
  for (auto c : r.ising_histogram->counts) total += c;
  EXPECT_EQ(total, 10);
  EXPECT_THROW(batch_hardness({}), ParameterError);
  const auto single = batch_hardness({src[0]});
  EXPECT_EQ(single.qubo_histogram->counts.size(), 1u);
}

TEST(Synthetic, Shape) {
  const SyntheticKpConfig cfg;
  const auto a = synthetic_kp(cfg, 3, 0), b = synthetic_kp(cfg, 3, 0);
  EXPECT_EQ(a.weights(), b.weights());
  EXPECT_EQ(a.size(), 50u);
  EXPECT_GT(a.capacity(), a.max_weight());
  EXPECT_LT(a.capacity(), a.total_weight());
  for (auto w : a.weights()) EXPECT_GE(w, 1);
}

}  // namespace
}  // namespace isingbench
