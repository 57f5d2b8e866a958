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
#include <string>
#include <string_view>

#include <json.hpp>

#include "isingbench/generator.hpp"
#include "isingbench/model.hpp"

namespace isingbench {

// Instance document ("ising-v1"):
//   {"format": "ising-v1",
//    "graph": {"family", "params", "nodes": [0..N-1], "edges": [[u, v], ...]},
//    "h": {"0": h_0, ...}, "J": [[u, v, J_uv], ...],
//    "h_range": [lo, hi], "J_range": [lo, hi], "seed": s, "meta": {...}}
// Unbounded range ends are written as null. Doubles are written in shortest
// round-trip form, so parsing reproduces every coefficient bit-for-bit.
nlohmann::json instance_to_json(const IsingModel& model, std::uint64_t seed,
                                const nlohmann::json& meta = nlohmann::json::object());

struct LoadedInstance {
  IsingModel model;
  std::uint64_t seed = 0;
  nlohmann::json meta = nlohmann::json::object();
};

// Throws ParseError on schema violations and the model's errors on invalid
// coefficients.
LoadedInstance instance_from_json(const nlohmann::json& doc);

// Sample document ("samples-v1"):
//   {"format": "samples-v1", "solver", "params": {...}, "seed", "vartype",
//    "records": [{"state": [...], "energy", "count"}], "meta": {...}}
nlohmann::json samples_to_json(const SampleSet& samples,
                               const nlohmann::json& meta = nlohmann::json::object());
SampleSet samples_from_json(const nlohmann::json& doc);

// QUBO document ("qubo-v1"):
//   {"format": "qubo-v1", "n", "linear": {"i": q_i}, "quadratic": [[i, j, q_ij]],
//    "offset"}
nlohmann::json qubo_to_json(const Qubo& qubo);
Qubo qubo_from_json(const nlohmann::json& doc);

// Distribution document: {"kind": "discrete_table" | "uniform" |
// "truncated_normal", "params": ...} where params is [[value, p], ...],
// {"lo", "hi"} or {"mu", "sigma", "lo", "hi"}.
nlohmann::json distribution_to_json(const CoefficientDistribution& dist);
CoefficientDistribution distribution_from_json(const nlohmann::json& doc);

// Compact form used on the command line:
//   "uniform:LO,HI", "truncated_normal:MU,SIGMA,LO,HI",
//   "discrete:V=P,V=P,...", or a JSON object as above.
CoefficientDistribution parse_distribution(std::string_view text);

std::string read_file(const std::string& path);
// Writes atomically enough for our purposes: full content, then close.
void write_file(const std::string& path, std::string_view content);

}  // namespace isingbench
