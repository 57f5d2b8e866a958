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

// One line per acceptance criterion. Exits nonzero when any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/oracles.hpp"
#include "isingbench/error.hpp"
#include "isingbench/generator.hpp"
#include "isingbench/knapsack.hpp"
#include "isingbench/metrics.hpp"
#include "isingbench/orderstats.hpp"
#include "isingbench/solvers.hpp"
#include "isingbench/topology.hpp"

namespace {

using namespace isingbench;
namespace fs = std::filesystem;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome cbfm_fidelity() {
  const auto d = cbfm_distributions();
  constexpr int kDraws = 200000;
  Rng rng(2024);
  std::map<double, int> hc, jc;
  for (int i = 0; i < kDraws; ++i) {
    ++hc[sample_coefficient(d.h, rng)];
    ++jc[sample_coefficient(d.j, rng)];
  }
  const std::vector<std::pair<double, double>> jt{{0, 0.35}, {-1, 0.10}, {1, 0.55}};
  const std::vector<std::pair<double, double>> ht{{0, 0.15}, {-1, 0.85}, {1, 0.0}};
  double worst = 0;
  for (auto [v, p] : jt) worst = std::max(worst, std::abs(jc[v] / double(kDraws) - p));
  for (auto [v, p] : ht) worst = std::max(worst, std::abs(hc[v] / double(kDraws) - p));
  return {worst <= 0.02, fmt("max |freq - table| = %.4f over %d draws each", worst, kDraws)};
}

Outcome hardness_calibration() {
  const auto g = testing::share(build_pegasus(16));
  double worst = 0;
  for (double f : {0.5, 1.0, 2.0, 4.0}) {
    const auto d = uniform_hardness_family(f);
    const auto m = generate_instance(g, d.h, d.j, 100 + static_cast<int>(f * 10));
    worst = std::max(worst, std::abs(*hardness_ratio(m).ratio / f - 1));
  }
  return {worst <= 0.05 && g->num_nodes() >= 5000,
          fmt("%d nodes, worst relative error %.4f", g->num_nodes(), worst)};
}

Outcome qubo_ising_equivalence() {
  double worst = 0;
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + k % 12;
    const auto q = testing::random_qubo(n, 500 + k);
    const auto conv = qubo_to_ising(q);
    for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
      const auto x = testing::bits_of(mask, n);
      const double lhs = testing::direct_qubo(q, x);
      const double rhs = ising_energy(conv.model, binary_to_spins(x)) + conv.offset;
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return {worst <= 1e-9, fmt("100 QUBOs, max |E_qubo - E_ising - offset| = %.2e", worst)};
}

Outcome solver_soundness() {
  const auto u = CoefficientDistribution::uniform(-1, 1);
  int sa_hits = 0, sqa_hits = 0;
  const auto k16 = testing::complete_graph(16), k12 = testing::complete_graph(12);
  for (int i = 0; i < 100; ++i) {
    const auto m = generate_instance(k16, u, u, 1000 + i);
    const double ground = solve_exact(m).min_energy();
    SaConfig c;
    c.num_reads = 100;
    c.sweeps = 2000;
    c.seed = 7000 + i;
    sa_hits += simulated_annealing(m, c).min_energy() <= ground + 1e-9;
  }
  for (int i = 0; i < 100; ++i) {
    const auto m = generate_instance(k12, u, u, 2000 + i);
    const double ground = solve_exact(m).min_energy();
    SqaConfig c;
    c.num_reads = 20;
    c.sweeps = 500;
    c.seed = 8000 + i;
    sqa_hits += simulated_quantum_annealing(m, c).min_energy() <= ground + 1e-9;
  }
  return {sa_hits >= 95 && sqa_hits >= 90,
          fmt("SA %d/100 at n=16, SQA %d/100 at n=12", sa_hits, sqa_hits)};
}

SampleSet single(double e) {
  SampleSet s;
  s.records.push_back({{1}, e, 1});
  return s;
}

Outcome rl_metric() {
  const bool identity = relative_difference(single(-5), single(-5)).rl_values[0] == 0.0;
  const double hand = relative_difference(single(-99), single(-100)).rl_values[0];
  const bool sign = relative_difference(single(-101), single(-100)).rl_values[0] < 0 &&
                    relative_difference(single(-50), single(-100)).rl_values[0] > 0;
  bool undefined = false;
  try {
    relative_difference(single(1), single(0));
  } catch (const UndefinedMetricError&) {
    undefined = true;
  }
  return {identity && sign && hand == (-99.0 + 100.0) / 100.0 && undefined,
          fmt("identity %d, sign %d, hand case %.17g, zero baseline rejected %d", identity, sign,
              hand, undefined)};
}

Outcome knapsack_range_law() {
  Rng rng(31);
  int violations = 0;
  for (int rep = 0; rep < 10000; ++rep) {
    const int n = 2 + static_cast<int>(rng.uniform01() * 40);
    std::vector<std::int64_t> w(n);
    for (auto& x : w) x = 1 + static_cast<std::int64_t>(rng.uniform01() * 1000);
    const auto lo = *std::min_element(w.begin(), w.end());
    const auto hi = *std::max_element(w.begin(), w.end());
    const auto c = lo + hi + static_cast<std::int64_t>(rng.uniform01() * 5000);
    const auto r = coefficient_ranges(KnapsackInstance(std::vector<std::int64_t>(n, 1), w, c));
    violations += r.len_h < r.len_j;
  }
  const auto ex = coefficient_ranges(KnapsackInstance({1, 1, 1}, {90, 16, 50}, 106));
  const bool exact = ex.len_h == 7844 && ex.len_j == 7844 && ex.threshold_c == 106;
  return {violations == 0 && exact,
          fmt("%d violations in 10^4 instances; example len_h %lld, len_J %lld", violations,
              static_cast<long long>(ex.len_h), static_cast<long long>(ex.len_j))};
}

Outcome kp_histogram_shape() {
  const SyntheticKpConfig cfg;
  int qubo = 0, ising = 0;
  for (int i = 0; i < 500; ++i) {
    const auto kp = synthetic_kp(cfg, 2024, i);
    const auto h = kp_hardness(kp, default_lambda(kp));
    qubo += h.qubo.ratio.value_or(0) > 1;
    ising += h.ising.ratio.value_or(0) > 1;
  }
  return {qubo >= 475 && ising >= 475,
          fmt("F > 1 for %d/500 QUBO and %d/500 Ising forms", qubo, ising)};
}

Outcome orderstats_oracle() {
  using namespace orderstats;
  const std::vector<std::pair<std::string, ContinuousDistribution>> weights{
      {"uniform", ContinuousDistribution::uniform(0, 1)},
      {"truncated_normal", ContinuousDistribution::truncated_normal(50, 15, 0,
                                                                    std::numeric_limits<double>::infinity())}};
  const auto capacity = ContinuousDistribution::uniform(1, 3);
  double worst = 0;
  std::string where;
  bool converged = true;
  for (const auto& [name, w] : weights)
    for (int n : {2, 5, 10})
      for (auto mode : {RangeMode::kRange, RangeMode::kScaledRange, RangeMode::kSquaredRange}) {
        const auto rows = evaluate_grid(w, capacity, n, mode, 25, 1000000, 77);
        for (const auto& r : rows) {
          converged = converged && r.converged;
          if (r.abs_diff > worst) {
            worst = r.abs_diff;
            where = fmt("%s n=%d %s", name.c_str(), n, std::string(to_string(mode)).c_str());
          }
        }
      }
  return {worst <= 0.01 && converged,
          fmt("18 grids, sup |F_quad - F_mc| = %.4f (%s)", worst, where.c_str())};
}

Outcome closed_form_range() {
  const double v = orderstats::cdf_range(orderstats::ContinuousDistribution::uniform(0, 1), 2, 0.5);
  const double oracle = 2 * 0.5 - 1 * 0.25;
  return {std::abs(v - oracle) <= 1e-6, fmt("cdf %.9f vs %.9f", v, oracle)};
}

int shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::map<std::string, std::string> snapshot(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (!e.is_regular_file() || e.path().filename() == "manifest.json") continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    files[fs::relative(e.path(), root).string()] = ss.str();
  }
  return files;
}

Outcome determinism() {
  const fs::path base = fs::temp_directory_path() / "isingbench_acceptance";
  fs::remove_all(base);
  fs::create_directories(base);
  const std::vector<std::string> commands{
      "generate --topology pegasus:3 --preset cbfm --count 2",
      "generate --topology zephyr:2 --hardness 2",
      "solve --instance gen/instance_000.json --solver sa:reads=16,sweeps=300",
      "solve --instance gen/instance_000.json --solver sqa:reads=8,sweeps=100,slices=8",
      "benchmark --instances gen/instance_000.json gen/instance_001.json "
      "--candidate sqa:slices=8 --reads 8 --sweeps 100",
      "kp --synthetic 30",
      "orderstats --weights uniform:0,1 --n 4 --mode range --points 9 --mc-samples 5000"};
  auto cli = [&](const std::string& threads, const fs::path& out, const std::string& args) {
    return shell("cd '" + base.string() + "' && '" ISINGBENCH_CLI "' --seed 11 --threads " +
                 threads + " --out '" + out.string() + "' " + args + " >/dev/null 2>&1") == 0;
  };
  // Inputs for the solve and benchmark commands.
  if (!cli("1", base / "gen", commands[0])) return {false, "could not generate inputs"};
  int identical = 0;
  std::string failed;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::map<std::string, std::string> runs[3];
    const char* threads[3] = {"1", "1", "4"};
    bool ok = true;
    for (int r = 0; r < 3; ++r) {
      const fs::path out = base / fmt("c%zu_r%d", i, r);
      ok = ok && cli(threads[r], out, commands[i]);
      if (ok) runs[r] = snapshot(out);
    }
    if (ok && !runs[0].empty() && runs[0] == runs[1] && runs[0] == runs[2]) {
      ++identical;
    } else {
      failed += " [" + commands[i] + "]";
    }
  }
  fs::remove_all(base);
  return {identical == static_cast<int>(commands.size()),
          fmt("%d/%zu commands byte-identical across reruns and thread counts%s", identical,
              commands.size(), failed.c_str())};
}

Outcome topology_invariants() {
  auto count = [](const HardwareGraph& g, int d) {
    int k = 0;
    for (int v = 0; v < g.num_nodes(); ++v) k += g.degree(v) == d;
    return k;
  };
  const auto c = build_chimera(16, 16, 4);
  const auto p = build_pegasus(16);
  const auto z = build_zephyr(6, 4);
  // Interior Chimera qubits: cells off the boundary along their coupler direction.
  const bool chimera =
      c.num_nodes() == 2048 && c.max_degree() == 6 && count(c, 6) == 2 * 4 * 16 * 14;
  const bool pegasus = p.num_nodes() == 24 * 16 * 15 - 8 * 15 && p.max_degree() == 15 &&
                       count(p, 15) > 0;
  const bool zephyr = z.num_nodes() == 4 * 4 * 6 * 13 && z.max_degree() == 20 && count(z, 20) > 0;
  return {chimera && pegasus && zephyr,
          fmt("chimera %d nodes (deg 6: %d), pegasus %d (deg 15: %d), zephyr %d (deg 20: %d)",
              c.num_nodes(), count(c, 6), p.num_nodes(), count(p, 15), z.num_nodes(),
              count(z, 20))};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"CBFM coefficient frequencies", 10, cbfm_fidelity},
      {"hardness-ratio calibration", 30, hardness_calibration},
      {"QUBO/Ising equivalence", 60, qubo_ising_equivalence},
      {"solver soundness", 300, solver_soundness},
      {"RL metric", 1e9, rl_metric},
      {"knapsack range law", 1e9, knapsack_range_law},
      {"knapsack hardness histogram shape", 120, kp_histogram_shape},
      {"order-statistics quadrature vs Monte Carlo", 300, orderstats_oracle},
      {"closed-form range c.d.f.", 1e9, closed_form_range},
      {"determinism", 1e9, determinism},
      {"topology invariants", 30, topology_invariants},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.pass && secs < criteria[i].limit_s;
    failures += !pass;
    std::printf("%s %zu %s: %s [%.1fs]\n", pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
