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

#include "isingbench/specs.hpp"

#include <charconv>
#include <set>
#include <vector>

#include "isingbench/error.hpp"
#include "isingbench/serialization.hpp"
#include "isingbench/solvers.hpp"

namespace isingbench {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    const auto end = text.find(sep, pos);
    out.push_back(text.substr(pos, end == std::string_view::npos ? end : end - pos));
    if (end == std::string_view::npos) return out;
    pos = end + 1;
  }
}

template <typename T>
T to_number(std::string_view field, std::string_view what) {
  T value{};
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    throw ParameterError("invalid " + std::string(what) + " '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

GraphPtr parse_topology(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParameterError("topology must look like FAMILY:PARAMS, got '" + std::string(text) + "'");
  }
  const auto family = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);
  if (family == "file") {
    return std::make_shared<const HardwareGraph>(load_graph(read_file(std::string(rest))).graph);
  }
  std::vector<int> p;
  for (auto field : split(rest, ',')) p.push_back(to_number<int>(field, "topology parameter"));
  if (family == "chimera" && !p.empty() && p.size() <= 3) {
    const int m = p[0], n = p.size() > 1 ? p[1] : m, t = p.size() > 2 ? p[2] : 4;
    return std::make_shared<const HardwareGraph>(build_chimera(m, n, t));
  }
  if (family == "pegasus" && p.size() == 1) {
    return std::make_shared<const HardwareGraph>(build_pegasus(p[0]));
  }
  if (family == "zephyr" && !p.empty() && p.size() <= 2) {
    return std::make_shared<const HardwareGraph>(build_zephyr(p[0], p.size() > 1 ? p[1] : 4));
  }
  throw ParameterError("unknown topology spec '" + std::string(text) + "'");
}

SolverSpec parse_solver_spec(std::string_view text) {
  SolverSpec spec;
  spec.text = std::string(text);
  const auto colon = text.find(':');
  spec.name = std::string(text.substr(0, colon));
  static const std::set<std::string> known{"exact", "sa", "sqa", "external"};
  if (!known.count(spec.name)) throw ParameterError("unknown solver '" + spec.name + "'");
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    if (rest.starts_with("cmd=")) {
      spec.params["cmd"] = std::string(rest.substr(4));
      break;
    }
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ParameterError("solver parameter must be key=value, got '" + std::string(item) + "'");
    }
    spec.params[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return spec;
}

namespace {

class ParamReader {
 public:
  ParamReader(const SolverSpec& spec, std::set<std::string> allowed) : spec_(spec) {
    for (const auto& [key, value] : spec.params) {
      if (!allowed.count(key)) {
        throw ParameterError("solver '" + spec.name + "' has no parameter '" + key + "'");
      }
    }
  }
  std::optional<std::string> get(const std::string& key) const {
    const auto it = spec_.params.find(key);
    if (it == spec_.params.end()) return std::nullopt;
    return it->second;
  }
  template <typename T>
  std::optional<T> number(const std::string& key) const {
    const auto v = get(key);
    if (!v) return std::nullopt;
    return to_number<T>(*v, key);
  }

 private:
  const SolverSpec& spec_;
};

}  // namespace

SampleSet run_solver(const IsingModel& model, const SolverSpec& spec, std::uint64_t seed,
                     const SolverDefaults& defaults) {
  if (spec.name == "exact") {
    ParamReader r(spec, {"max_nodes"});
    ExactConfig cfg;
    cfg.max_nodes = r.number<int>("max_nodes").value_or(cfg.max_nodes);
    return solve_exact(model, cfg);
  }
  if (spec.name == "sa") {
    ParamReader r(spec, {"reads", "sweeps", "schedule", "beta_hot", "beta_cold"});
    SaConfig cfg;
    cfg.num_reads = r.number<int>("reads").value_or(defaults.reads);
    cfg.sweeps = r.number<int>("sweeps").value_or(defaults.sweeps.value_or(cfg.sweeps));
    if (const auto s = r.get("schedule")) {
      if (*s == "geometric") {
        cfg.schedule = BetaSchedule::kGeometric;
      } else if (*s == "linear") {
        cfg.schedule = BetaSchedule::kLinear;
      } else {
        throw ParameterError("schedule must be geometric or linear");
      }
    }
    cfg.beta_hot = r.number<double>("beta_hot");
    cfg.beta_cold = r.number<double>("beta_cold");
    cfg.seed = seed;
    cfg.threads = defaults.threads;
    return simulated_annealing(model, cfg);
  }
  if (spec.name == "sqa") {
    ParamReader r(spec, {"reads", "sweeps", "slices", "temperature", "gamma0", "gamma1"});
    SqaConfig cfg;
    cfg.num_reads = r.number<int>("reads").value_or(defaults.reads);
    cfg.sweeps = r.number<int>("sweeps").value_or(defaults.sweeps.value_or(cfg.sweeps));
    cfg.trotter_slices = r.number<int>("slices").value_or(cfg.trotter_slices);
    cfg.temperature = r.number<double>("temperature").value_or(cfg.temperature);
    cfg.gamma_initial = r.number<double>("gamma0").value_or(cfg.gamma_initial);
    cfg.gamma_final = r.number<double>("gamma1").value_or(cfg.gamma_final);
    cfg.seed = seed;
    cfg.threads = defaults.threads;
    return simulated_quantum_annealing(model, cfg);
  }
  ParamReader r(spec, {"cmd", "tol"});
  ExternalSolverConfig cfg;
  const auto cmd = r.get("cmd");
  if (!cmd || cmd->empty()) throw ParameterError("external solver needs cmd=COMMAND");
  cfg.command = *cmd;
  cfg.energy_tolerance = r.number<double>("tol").value_or(cfg.energy_tolerance);
  return external_solver(model, cfg);
}

}  // namespace isingbench
