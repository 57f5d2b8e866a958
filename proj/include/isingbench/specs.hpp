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
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "isingbench/model.hpp"
#include "isingbench/topology.hpp"

namespace isingbench {

// "chimera:M[,N[,T]]" (N defaults to M, T to 4), "pegasus:M",
// "zephyr:M[,T]" (T defaults to 4) or "file:PATH" for an edge list.
// Throws ParameterError for malformed specs.
GraphPtr parse_topology(std::string_view text);

struct SolverSpec {
  std::string name;  // exact, sa, sqa or external
  std::map<std::string, std::string> params;
  std::string text;  // as given
};

// "NAME" or "NAME:key=value,key=value". For external solvers everything after
// "cmd=" is taken verbatim, so it must come last.
SolverSpec parse_solver_spec(std::string_view text);

struct SolverDefaults {
  int reads = 100;
  std::optional<int> sweeps;  // overrides the solver default, not the spec
  int threads = 1;
};

// Keys: exact {max_nodes}; sa {reads, sweeps, schedule, beta_hot, beta_cold};
// sqa {reads, sweeps, slices, temperature, gamma0, gamma1};
// external {cmd, tol}. Unknown keys raise ParameterError.
SampleSet run_solver(const IsingModel& model, const SolverSpec& spec, std::uint64_t seed,
                     const SolverDefaults& defaults = {});

}  // namespace isingbench
