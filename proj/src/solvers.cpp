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

#include "isingbench/solvers.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "isingbench/error.hpp"
#include "isingbench/parallel.hpp"
#include "isingbench/random.hpp"
#include "isingbench/serialization.hpp"

namespace isingbench {

namespace {

// Flat neighbor lists with the coupling stored next to each neighbor.
struct CouplingTable {
  std::vector<int> offsets;
  std::vector<int> neighbor;
  std::vector<double> weight;

  explicit CouplingTable(const IsingModel& model) {
    const auto& g = model.graph();
    offsets.resize(g.num_nodes() + 1, 0);
    for (int i = 0; i < g.num_nodes(); ++i) offsets[i + 1] = offsets[i] + g.degree(i);
    neighbor.reserve(offsets.back());
    weight.reserve(offsets.back());
    for (int i = 0; i < g.num_nodes(); ++i) {
      for (const auto& nb : g.neighbors(i)) {
        neighbor.push_back(nb.node);
        weight.push_back(model.j()[nb.edge]);
      }
    }
  }
};

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

SampleSet solve_exact(const IsingModel& model, const ExactConfig& config) {
  const int n = model.num_nodes();
  if (n > config.max_nodes) {
    throw CapacityError("exact solver refuses " + std::to_string(n) +
                        " nodes (cap " + std::to_string(config.max_nodes) + ")");
  }
  const CouplingTable table(model);
  std::vector<std::int8_t> s(n, 1);
  std::vector<double> field(n);
  for (int i = 0; i < n; ++i) {
    double f = model.h()[i];
    for (int a = table.offsets[i]; a < table.offsets[i + 1]; ++a) f += table.weight[a];
    field[i] = f;
  }
  double energy = ising_energy(model, s);
  double best = energy;
  double scale = 1.0;
  for (double h : model.h()) scale += std::abs(h);
  for (double j : model.j()) scale += std::abs(j);
  const double tol = 1e-9 * scale;

  std::vector<std::vector<std::int8_t>> ground{s};
  std::size_t ground_count = 1;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < total; ++k) {
    const int i = std::countr_zero(k);
    energy -= 2.0 * s[i] * field[i];
    s[i] = static_cast<std::int8_t>(-s[i]);
    const double twice = 2.0 * s[i];
    for (int a = table.offsets[i]; a < table.offsets[i + 1]; ++a) {
      field[table.neighbor[a]] += twice * table.weight[a];
    }
    if (energy < best - tol) {
      best = energy;
      ground.clear();
      ground.push_back(s);
      ground_count = 1;
    } else if (energy <= best + tol) {
      best = std::min(best, energy);
      ++ground_count;
      if (ground.size() < config.max_ground_states) ground.push_back(s);
    }
  }

  // Recompute energies exactly and keep only true minimizers.
  SampleSet out;
  out.solver = "exact";
  std::vector<SampleRecord> records;
  double exact_best = std::numeric_limits<double>::infinity();
  for (auto& state : ground) {
    const double e = ising_energy(model, state);
    exact_best = std::min(exact_best, e);
    records.push_back({std::move(state), e, 1});
  }
  std::erase_if(records, [&](const SampleRecord& r) { return r.energy > exact_best + tol; });
  std::sort(records.begin(), records.end(),
            [](const SampleRecord& a, const SampleRecord& b) { return a.state < b.state; });
  out.records = std::move(records);
  out.params["ground_state_count"] = std::to_string(ground_count);
  out.params["truncated"] = ground_count > out.records.size() ? "true" : "false";
  out.params["max_nodes"] = std::to_string(config.max_nodes);
  return out;
}

BetaRange default_beta_range(const IsingModel& model) {
  const int n = model.num_nodes();
  std::vector<double> field_sum(n, 0.0);
  double min_abs = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double a = std::abs(model.h()[i]);
    field_sum[i] += a;
    if (a > 0.0) min_abs = std::min(min_abs, a);
  }
  const auto& edges = model.graph().edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const double a = std::abs(model.j()[e]);
    field_sum[edges[e].first] += a;
    field_sum[edges[e].second] += a;
    if (a > 0.0) min_abs = std::min(min_abs, a);
  }
  const double max_field =
      field_sum.empty() ? 0.0 : *std::max_element(field_sum.begin(), field_sum.end());
  if (max_field == 0.0) return {0.1, 1.0};
  return {std::log(2.0) / (2.0 * max_field), std::log(100.0) / (2.0 * min_abs)};
}

std::vector<double> beta_schedule(BetaSchedule kind, BetaRange range, int sweeps) {
  if (sweeps < 1) throw ParameterError("sweeps must be >= 1");
  if (!(range.hot > 0.0 && range.hot < range.cold)) {
    throw ParameterError("beta schedule requires 0 < beta_hot < beta_cold");
  }
  std::vector<double> betas(sweeps);
  if (sweeps == 1) {
    betas[0] = range.cold;
    return betas;
  }
  for (int k = 0; k < sweeps; ++k) {
    const double u = static_cast<double>(k) / (sweeps - 1);
    betas[k] = kind == BetaSchedule::kGeometric
                   ? range.hot * std::pow(range.cold / range.hot, u)
                   : range.hot + (range.cold - range.hot) * u;
  }
  return betas;
}

SampleSet simulated_annealing(const IsingModel& model, const SaConfig& config) {
  if (config.num_reads < 1 || config.sweeps < 1) {
    throw ParameterError("num_reads and sweeps must be >= 1");
  }
  BetaRange range = default_beta_range(model);
  if (config.beta_hot) range.hot = *config.beta_hot;
  if (config.beta_cold) range.cold = *config.beta_cold;
  const auto betas = beta_schedule(config.schedule, range, config.sweeps);
  const CouplingTable table(model);
  const int n = model.num_nodes();
  const auto& h = model.h();

  SampleSet out;
  out.solver = "sa";
  out.seed = config.seed;
  out.records.resize(config.num_reads);
  parallel_for(config.num_reads, config.threads, [&](std::size_t read) {
    Rng rng(config.seed, streams::kRead, read);
    std::vector<std::int8_t> s(n);
    for (auto& x : s) x = static_cast<std::int8_t>(rng.spin());
    std::vector<double> field(n);
    for (int i = 0; i < n; ++i) {
      double f = h[i];
      for (int a = table.offsets[i]; a < table.offsets[i + 1]; ++a) {
        f += table.weight[a] * s[table.neighbor[a]];
      }
      field[i] = f;
    }
    for (double beta : betas) {
      for (int i = 0; i < n; ++i) {
        const double delta = -2.0 * s[i] * field[i];
        if (delta > 0.0 && rng.uniform01() >= std::exp(-beta * delta)) continue;
        s[i] = static_cast<std::int8_t>(-s[i]);
        const double twice = 2.0 * s[i];
        for (int a = table.offsets[i]; a < table.offsets[i + 1]; ++a) {
          field[table.neighbor[a]] += twice * table.weight[a];
        }
      }
    }
    const double e = ising_energy(model, s);
    out.records[read] = {std::move(s), e, 1};
  });
  out.params["num_reads"] = std::to_string(config.num_reads);
  out.params["sweeps"] = std::to_string(config.sweeps);
  out.params["beta_schedule"] =
      config.schedule == BetaSchedule::kGeometric ? "geometric" : "linear";
  out.params["beta_hot"] = format_double(range.hot);
  out.params["beta_cold"] = format_double(range.cold);
  return out;
}

TransverseCoupling transverse_coupling(double gamma, int slices, double temperature) {
  const double pt = slices * temperature;
  double arg = gamma / pt;
  bool clamped = false;
  if (!(arg >= 1e-300)) {
    arg = 1e-300;
    clamped = true;
  }
  return {-0.5 * pt * std::log(std::tanh(arg)), clamped};
}

SampleSet simulated_quantum_annealing(const IsingModel& model, const SqaConfig& config) {
  if (config.num_reads < 1 || config.sweeps < 1 || config.trotter_slices < 1) {
    throw ParameterError("num_reads, sweeps and trotter_slices must be >= 1");
  }
  if (!(config.temperature > 0.0)) throw ParameterError("temperature must be > 0");
  if (!(config.gamma_final > 0.0 && config.gamma_final < config.gamma_initial)) {
    throw ParameterError("SQA requires 0 < gamma_final < gamma_initial");
  }
  const int n = model.num_nodes();
  const int slices = config.trotter_slices;
  const CouplingTable table(model);
  const auto& h = model.h();

  std::vector<double> jperp(config.sweeps);
  int clamped_sweeps = 0;
  for (int k = 0; k < config.sweeps; ++k) {
    const double u = config.sweeps == 1 ? 1.0 : static_cast<double>(k) / (config.sweeps - 1);
    const double gamma = config.gamma_initial + (config.gamma_final - config.gamma_initial) * u;
    const auto c = transverse_coupling(gamma, slices, config.temperature);
    jperp[k] = c.value;
    clamped_sweeps += c.clamped;
  }
  const double inv_slices = 1.0 / slices;
  const double inv_t = 1.0 / config.temperature;

  SampleSet out;
  out.solver = "sqa";
  out.seed = config.seed;
  out.records.resize(config.num_reads);
  parallel_for(config.num_reads, config.threads, [&](std::size_t read) {
    Rng rng(config.seed, streams::kRead, read);
    // spins[k * n + i]: node i in slice k.
    std::vector<std::int8_t> spins(static_cast<std::size_t>(slices) * n);
    for (auto& x : spins) x = static_cast<std::int8_t>(rng.spin());
    std::vector<double> field(spins.size());
    for (int k = 0; k < slices; ++k) {
      const std::int8_t* s = spins.data() + static_cast<std::size_t>(k) * n;
      for (int i = 0; i < n; ++i) {
        double f = h[i];
        for (int a = table.offsets[i]; a < table.offsets[i + 1]; ++a) {
          f += table.weight[a] * s[table.neighbor[a]];
        }
        field[static_cast<std::size_t>(k) * n + i] = f;
      }
    }
    for (int sweep = 0; sweep < config.sweeps; ++sweep) {
      const double jp = jperp[sweep];
      for (int k = 0; k < slices; ++k) {
        std::int8_t* s = spins.data() + static_cast<std::size_t>(k) * n;
        double* f = field.data() + static_cast<std::size_t>(k) * n;
        const std::int8_t* prev = spins.data() + static_cast<std::size_t>((k + slices - 1) % slices) * n;
        const std::int8_t* next = spins.data() + static_cast<std::size_t>((k + 1) % slices) * n;
        for (int i = 0; i < n; ++i) {
          double delta = -2.0 * s[i] * f[i] * inv_slices;
          if (slices > 1) delta += 2.0 * jp * s[i] * (prev[i] + next[i]);
          if (delta > 0.0 && rng.uniform01() >= std::exp(-delta * inv_t)) continue;
          s[i] = static_cast<std::int8_t>(-s[i]);
          const double twice = 2.0 * s[i];
          for (int a = table.offsets[i]; a < table.offsets[i + 1]; ++a) {
            f[table.neighbor[a]] += twice * table.weight[a];
          }
        }
      }
    }
    int best_slice = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < slices; ++k) {
      const double e = ising_energy(
          model, std::span<const std::int8_t>(spins.data() + static_cast<std::size_t>(k) * n, n));
      if (e < best) {
        best = e;
        best_slice = k;
      }
    }
    auto first = spins.begin() + static_cast<std::ptrdiff_t>(best_slice) * n;
    out.records[read] = {std::vector<std::int8_t>(first, first + n), best, 1};
  });
  out.params["num_reads"] = std::to_string(config.num_reads);
  out.params["sweeps"] = std::to_string(config.sweeps);
  out.params["trotter_slices"] = std::to_string(slices);
  out.params["temperature"] = format_double(config.temperature);
  out.params["gamma_initial"] = format_double(config.gamma_initial);
  out.params["gamma_final"] = format_double(config.gamma_final);
  if (clamped_sweeps > 0) out.params["jperp_clamped_sweeps"] = std::to_string(clamped_sweeps);
  return out;
}

SampleSet external_solver(const IsingModel& model, const ExternalSolverConfig& config) {
  if (config.command.empty()) throw ParameterError("empty external solver command");
  char path[] = "/tmp/isingbench-instance-XXXXXX";
  const int fd = mkstemp(path);
  if (fd < 0) throw SolverError("cannot create temporary instance file");
  close(fd);
  struct Cleanup {
    const char* p;
    ~Cleanup() { std::remove(p); }
  } cleanup{path};
  {
    std::ofstream os(path, std::ios::binary);
    os << instance_to_json(model, 0).dump(2) << '\n';
    if (!os) throw SolverError("cannot write temporary instance file");
  }

  const std::string cmd = "(" + config.command + ") < '" + path + "'";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw SolverError("cannot start external solver: " + config.command);
  std::string output;
  char buffer[4096];
  std::size_t got;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
  const int status = pclose(pipe);
  if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    const int code = (status != -1 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    throw SolverError("external solver exited with status " + std::to_string(code));
  }

  SampleSet samples;
  try {
    samples = samples_from_json(nlohmann::json::parse(output));
  } catch (const nlohmann::json::exception& e) {
    throw SolverError(std::string("external solver produced malformed JSON: ") + e.what());
  } catch (const Error& e) {
    throw SolverError(std::string("external solver produced an invalid sample set: ") +
                      e.what());
  }
  try {
    verify_samples(model, samples, config.energy_tolerance);
  } catch (const Error& e) {
    throw SolverError(std::string("external solver output failed verification: ") + e.what());
  }
  return samples;
}

}  // namespace isingbench
