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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

#include "isingbench/error.hpp"
#include "isingbench/serialization.hpp"
#include "isingbench/solvers.hpp"
#include "oracles.hpp"

namespace isingbench {
namespace {

using testing::random_model;
using testing::share;

TEST(Exact, FerromagneticPair) {
  const IsingModel m(testing::path_graph(2), {0.0, 0.0}, {-1.0});
  const auto s = solve_exact(m);
  ASSERT_EQ(s.records.size(), 2u);
  EXPECT_EQ(s.records[0].energy, -1.0);
  EXPECT_EQ(s.records[0].state, (std::vector<std::int8_t>{-1, -1}));
  EXPECT_EQ(s.records[1].state, (std::vector<std::int8_t>{1, 1}));
}

TEST(Exact, SingleField) {
  const auto g = share(HardwareGraph(TopologyFamily::kCustom, {}, 1, {}));
  const IsingModel m(g, {2.0}, {});
  const auto s = solve_exact(m);
  ASSERT_EQ(s.records.size(), 1u);
  EXPECT_EQ(s.records[0].state, (std::vector<std::int8_t>{-1}));
  EXPECT_EQ(s.records[0].energy, -2.0);
}

TEST(Exact, MatchesIndependentScan) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto m = random_model(share(build_chimera(1, 2, 3)), seed);
    ASSERT_EQ(m.num_nodes(), 12);
    const auto s = solve_exact(m);
    EXPECT_NEAR(s.min_energy(), testing::brute_min(m), 1e-12);
    for (const auto& r : s.records) EXPECT_NEAR(testing::direct_energy(m, r.state), r.energy, 1e-12);
  }
}

TEST(Exact, RefusesLargeModels) {
  const auto m = IsingModel::zeros(share(build_chimera(2, 2, 4)));
  EXPECT_THROW(solve_exact(m), Error);
  ExactConfig cfg;
  cfg.max_nodes = 4;
  EXPECT_THROW(solve_exact(random_model(testing::complete_graph(5), 1), cfg), Error);
}

TEST(Exact, ZeroModelTruncatesGroundStates) {
  ExactConfig cfg;
  cfg.max_ground_states = 10;
  const auto s = solve_exact(IsingModel::zeros(testing::complete_graph(6)), cfg);
  EXPECT_EQ(s.records.size(), 10u);
  EXPECT_EQ(s.params.at("ground_state_count"), "64");
  EXPECT_EQ(s.params.at("truncated"), "true");
}

SaConfig sa(int reads, int sweeps, std::uint64_t seed, int threads = 1) {
  SaConfig c;
  c.num_reads = reads;
  c.sweeps = sweeps;
  c.seed = seed;
  c.threads = threads;
  return c;
}

TEST(Sa, ZeroModel) {
  const auto s = simulated_annealing(IsingModel::zeros(testing::complete_graph(5)), sa(5, 10, 1));
  EXPECT_EQ(s.total_count(), 5);
  for (const auto& r : s.records) EXPECT_EQ(r.energy, 0.0);
}

TEST(Sa, FerromagneticChain) {
  const auto g = testing::path_graph(20);
  const IsingModel m(g, std::vector<double>(20, 0.0), std::vector<double>(19, -1.0));
  EXPECT_EQ(simulated_annealing(m, sa(20, 500, 3)).min_energy(), -19.0);
}

TEST(Sa, DeterministicAndThreadIndependent) {
  const auto m = random_model(share(build_chimera(2, 2, 4)), 4);
  const auto a = simulated_annealing(m, sa(16, 100, 9, 1));
  const auto b = simulated_annealing(m, sa(16, 100, 9, 4));
  EXPECT_EQ(a, b);
  EXPECT_NE(a.records, simulated_annealing(m, sa(16, 100, 10)).records);
}

TEST(Sa, EnergiesVerifiedAndNeverBelowGround) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto m = random_model(share(build_chimera(1, 2, 4)), 100 + seed);
    const auto s = simulated_annealing(m, sa(50, 300, seed));
    EXPECT_NO_THROW(verify_samples(m, s));
    EXPECT_GE(s.min_energy(), testing::brute_min(m) - 1e-9);
  }
}

TEST(Sa, RecoversGroundStates) {
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto m = random_model(share(build_chimera(1, 2, 4)), 200 + seed);
    hits += std::abs(simulated_annealing(m, sa(100, 1000, seed)).min_energy() -
                     testing::brute_min(m)) < 1e-9;
  }
  EXPECT_GE(hits, 19);
}

TEST(Sa, MoreSweepsNoWorse) {
  double long_sum = 0, short_sum = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto m = random_model(share(build_chimera(1, 2, 4)), 300 + seed);
    for (const auto& r : simulated_annealing(m, sa(20, 2000, seed)).records) long_sum += r.energy;
    for (const auto& r : simulated_annealing(m, sa(20, 50, seed)).records) short_sum += r.energy;
  }
  EXPECT_LE(long_sum, short_sum);
}

TEST(Sa, BetaRangeDefaults) {
  const IsingModel m(testing::path_graph(3), {1.0, -0.5, 0.0}, {0.25, -1.0});
  const auto r = default_beta_range(m);
  // Largest local field: node 1 with |h| + sum |J| = 1.75.
  EXPECT_NEAR(r.hot, std::log(2.0) / (2 * 1.75), 1e-15);
  EXPECT_NEAR(r.cold, std::log(100.0) / (2 * 0.25), 1e-15);
  const auto g = beta_schedule(BetaSchedule::kGeometric, r, 5);
  ASSERT_EQ(g.size(), 5u);
  EXPECT_NEAR(g.front(), r.hot, 1e-15);
  EXPECT_NEAR(g.back(), r.cold, 1e-12);
  EXPECT_NEAR(g[2], std::sqrt(r.hot * r.cold), 1e-12);
}

SqaConfig sqa(int reads, int sweeps, std::uint64_t seed) {
  SqaConfig c;
  c.num_reads = reads;
  c.sweeps = sweeps;
  c.seed = seed;
  return c;
}

TEST(Sqa, ZeroModel) {
  const auto s = simulated_quantum_annealing(IsingModel::zeros(testing::complete_graph(4)),
                                             sqa(3, 20, 1));
  for (const auto& r : s.records) EXPECT_EQ(r.energy, 0.0);
}

TEST(Sqa, FindsGroundStateOfSmallInstances) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto m = random_model(share(build_chimera(1, 2, 3)), 400 + seed);
    const auto s = simulated_quantum_annealing(m, sqa(100, 300, seed));
    EXPECT_NO_THROW(verify_samples(m, s));
    EXPECT_NEAR(s.min_energy(), testing::brute_min(m), 1e-9);
  }
}

TEST(Sqa, DeterministicAcrossThreads) {
  const auto m = random_model(share(build_chimera(1, 2, 3)), 5);
  auto c = sqa(8, 50, 2);
  const auto a = simulated_quantum_annealing(m, c);
  c.threads = 3;
  EXPECT_EQ(a, simulated_quantum_annealing(m, c));
}

TEST(Sqa, TransverseCoupling) {
  const auto jp = transverse_coupling(1.0, 4, 0.5);
  EXPECT_NEAR(jp.value, -(4 * 0.5 / 2) * std::log(std::tanh(1.0 / 2.0)), 1e-15);
  EXPECT_FALSE(jp.clamped);
  EXPECT_GT(jp.value, 0.0);
  const auto tiny = transverse_coupling(1e-310, 4, 0.5);
  EXPECT_TRUE(tiny.clamped);
  EXPECT_TRUE(std::isfinite(tiny.value));
}

// With one slice the transverse term vanishes and the sampler reduces to
// Metropolis at temperature T, whose stationary law is the Boltzmann law.
TEST(Sqa, SingleSliceSamplesBoltzmann) {
  const IsingModel m(testing::complete_graph(4), {0.3, -0.2, 0.1, 0.0},
                     {0.5, -0.4, 0.2, 0.3, -0.6, 0.1});
  const double t = 1.0;
  std::map<std::vector<std::int8_t>, double> exact;
  double z = 0;
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    const auto s = testing::spins_of(mask, 4);
    const double w = std::exp(-testing::direct_energy(m, s) / t);
    exact[s] = w;
    z += w;
  }
  SqaConfig c = sqa(40000, 30, 7);
  c.trotter_slices = 1;
  c.temperature = t;
  c.gamma_initial = 1e-3;
  c.gamma_final = 1e-4;
  c.threads = 4;
  const auto s = simulated_quantum_annealing(m, c);
  std::map<std::vector<std::int8_t>, double> seen;
  for (const auto& r : s.records) seen[r.state] += static_cast<double>(r.count) / c.num_reads;
  double tv = 0;
  for (const auto& [state, w] : exact) tv += std::abs(seen[state] - w / z);
  EXPECT_LT(0.5 * tv, 0.02);
}

class External : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("isingbench-ext-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string put(const std::string& name, const std::string& text) {
    const auto p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::filesystem::path dir_;
};

TEST_F(External, EchoesPrecomputedSet) {
  const auto m = random_model(testing::complete_graph(5), 6);
  const auto exact = solve_exact(m);
  const auto file = put("s.json", samples_to_json(exact).dump());
  const auto got = external_solver(m, {"cat '" + file + "'", 1e-6});
  EXPECT_EQ(got.records, exact.records);
}

TEST_F(External, WrongEnergyRejected) {
  const auto m = random_model(testing::complete_graph(5), 6);
  auto bad = solve_exact(m);
  bad.records[0].energy += 0.5;
  const auto file = put("s.json", samples_to_json(bad).dump());
  try {
    external_solver(m, {"cat '" + file + "'", 1e-6});
    FAIL();
  } catch (const SolverError& e) {
    EXPECT_NE(std::string(e.what()).find("verification"), std::string::npos);
  }
}

TEST_F(External, FailureModes) {
  const auto m = random_model(testing::complete_graph(3), 6);
  EXPECT_THROW(external_solver(m, {"exit 3", 1e-6}), SolverError);
  EXPECT_THROW(external_solver(m, {"echo '{not json'", 1e-6}), SolverError);
  EXPECT_THROW(external_solver(m, {"echo '{\"format\": \"other\"}'", 1e-6}), SolverError);
}

TEST_F(External, ReceivesInstanceOnStdin) {
  const auto m = random_model(testing::complete_graph(4), 8);
  const auto copy = (dir_ / "in.json").string();
  const auto exact = solve_exact(m);
  const auto file = put("s.json", samples_to_json(exact).dump());
  external_solver(m, {"cat > '" + copy + "'; cat '" + file + "'", 1e-6});
  const auto back = instance_from_json(nlohmann::json::parse(read_file(copy)));
  EXPECT_EQ(back.model.h(), m.h());
  EXPECT_EQ(back.model.j(), m.j());
}

#ifdef ISINGBENCH_CLI
TEST_F(External, WrappedExactSolverAgrees) {
  const auto m = random_model(share(build_chimera(1, 1, 4)), 12);
  const auto got = external_solver(
      m, {std::string(ISINGBENCH_CLI) + " solve --instance - --solver exact --output -", 1e-9});
  EXPECT_EQ(got.records, solve_exact(m).records);
}
#endif

}  // namespace
}  // namespace isingbench
