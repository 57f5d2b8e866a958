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

#include <cstdint>
#include <optional>
#include <string>

#include "isingbench/model.hpp"

namespace isingbench {

struct ExactConfig {
  int max_nodes = 24;
  // Ground states beyond this many are counted but not stored.
  std::size_t max_ground_states = 4096;
};

// Gray-code enumeration of all 2^n states. Returns every ground state (count 1
// each, sorted) with its exactly recomputed energy. Params record
// "ground_state_count" and "truncated". Throws CapacityError above the cap.
SampleSet solve_exact(const IsingModel& model, const ExactConfig& config = {});

enum class BetaSchedule { kGeometric, kLinear };

struct SaConfig {
  int num_reads = 100;
  int sweeps = 1000;
  BetaSchedule schedule = BetaSchedule::kGeometric;
  // When unset, derived from the model by default_beta_range().
  std::optional<double> beta_hot;
  std::optional<double> beta_cold;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct BetaRange {
  double hot;
  double cold;
};

// Hot end: the largest single-flip energy change 2*max_i(|h_i| + sum_j |J_ij|)
// is accepted with probability 1/2. Cold end: the smallest nonzero change
// 2*min|coefficient| is accepted with probability 1/100.
BetaRange default_beta_range(const IsingModel& model);

// Inverse temperature of each sweep.
std::vector<double> beta_schedule(BetaSchedule kind, BetaRange range, int sweeps);

// Metropolis single-spin-flip annealing. Every read starts from uniformly
// random spins drawn from substream (seed, read) and sweeps nodes in id order.
// One record (count 1) per read, in read order.
SampleSet simulated_annealing(const IsingModel& model, const SaConfig& config);

struct SqaConfig {
  int num_reads = 100;
  int sweeps = 1000;
  int trotter_slices = 32;
  double temperature = 0.05;
  double gamma_initial = 3.0;
  double gamma_final = 0.01;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct TransverseCoupling {
  double value;
  bool clamped;
};

// Ferromagnetic coupling between neighboring Trotter slices,
// -(P T / 2) ln tanh(gamma / (P T)). Arguments below 1e-300 are clamped.
TransverseCoupling transverse_coupling(double gamma, int slices,
                                       double temperature);

// Path-integral Monte Carlo stand-in for quantum annealing. The transverse
// field decreases linearly in sweep index from gamma_initial to gamma_final.
// Each read returns the lowest-energy slice of its final configuration.
// Params record "jperp_clamped_sweeps" when the coupling was clamped.
SampleSet simulated_quantum_annealing(const IsingModel& model,
                                      const SqaConfig& config);

struct ExternalSolverConfig {
  std::string command;  // run through /bin/sh
  double energy_tolerance = 1e-6;
};

// Writes the instance JSON to the command's standard input, parses a
// samples-v1 document from its standard output and re-verifies every energy.
// Throws SolverError naming the failure (exit status, JSON, energy mismatch).
SampleSet external_solver(const IsingModel& model,
                          const ExternalSolverConfig& config);

}  // namespace isingbench
