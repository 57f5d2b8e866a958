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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isingbench/error.hpp"
#include "isingbench/generator.hpp"
#include "isingbench/knapsack.hpp"
#include "isingbench/metrics.hpp"
#include "isingbench/orderstats.hpp"
#include "isingbench/serialization.hpp"
#include "isingbench/specs.hpp"
#include "isingbench/topology.hpp"

namespace py = pybind11;
using namespace isingbench;

namespace {

std::optional<double> ratio_of(const HardnessReport& r) { return r.ratio; }

py::dict hardness_dict(const HardnessReport& r) {
  py::dict d;
  d["sigma_h"] = r.sigma_h;
  d["sigma_j"] = r.sigma_j;
  d["ratio"] = ratio_of(r);
  return d;
}

std::optional<orderstats::ContinuousDistribution> maybe_law(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return orderstats::parse_continuous(*s);
}

}  // namespace

PYBIND11_MODULE(_isingbench, m) {
  m.doc() = "Hardware-native Ising benchmarks, hardness ratios and order statistics";
  m.attr("__version__") = ISINGBENCH_VERSION;

  static py::exception<Error> error(m, "Error");
  static py::exception<ParameterError> parameter_error(m, "ParameterError", error.ptr());
  static py::exception<RangeError> range_error(m, "RangeError", error.ptr());
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  static py::exception<UndefinedMetricError> undefined_error(m, "UndefinedMetricError", error.ptr());
  static py::exception<ConvergenceError> convergence_error(m, "ConvergenceError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParameterError& e) {
      py::set_error(parameter_error, e.what());
    } catch (const RangeError& e) {
      py::set_error(range_error, e.what());
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const UndefinedMetricError& e) {
      py::set_error(undefined_error, e.what());
    } catch (const ConvergenceError& e) {
      py::set_error(convergence_error, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<HardwareGraph, std::shared_ptr<HardwareGraph>>(m, "Graph")
      .def_property_readonly("num_nodes", &HardwareGraph::num_nodes)
      .def_property_readonly("num_edges", &HardwareGraph::num_edges)
      .def_property_readonly("family",
                             [](const HardwareGraph& g) { return std::string(to_string(g.family())); })
      .def_property_readonly("edges", &HardwareGraph::edges)
      .def("degree", &HardwareGraph::degree)
      .def_property_readonly("max_degree", &HardwareGraph::max_degree);

  m.def("topology",
        [](const std::string& spec) {
          return std::const_pointer_cast<HardwareGraph>(parse_topology(spec));
        },
        py::arg("spec"), "Builds a graph from 'chimera:M[,N[,T]]', 'pegasus:M' or 'zephyr:M[,T]'.");

  py::class_<IsingModel>(m, "IsingModel")
      .def_property_readonly("num_nodes", &IsingModel::num_nodes)
      .def_property_readonly("h", &IsingModel::h)
      .def_property_readonly("j", &IsingModel::j)
      .def_property_readonly("edges", [](const IsingModel& x) { return x.graph().edges(); })
      .def("energy",
           [](const IsingModel& x, const std::vector<std::int8_t>& s) { return ising_energy(x, s); })
      .def("hardness", [](const IsingModel& x) { return hardness_dict(hardness_ratio(x)); })
      .def("to_json", [](const IsingModel& x, std::uint64_t seed) {
        return instance_to_json(x, seed).dump(2);
      }, py::arg("seed") = 0);

  m.def("instance_from_json",
        [](const std::string& text) { return instance_from_json(nlohmann::json::parse(text)).model; });

  m.def("generate",
        [](const std::string& topology, std::uint64_t seed, std::optional<double> hardness,
           std::optional<std::string> h_dist, std::optional<std::string> j_dist) {
          DistributionPair d = cbfm_distributions();
          if (hardness) d = uniform_hardness_family(*hardness);
          if (h_dist) d.h = parse_distribution(*h_dist);
          if (j_dist) d.j = parse_distribution(*j_dist);
          return generate_instance(parse_topology(topology), d.h, d.j, seed);
        },
        py::arg("topology"), py::arg("seed") = 0, py::arg("hardness") = py::none(),
        py::arg("h_dist") = py::none(), py::arg("j_dist") = py::none(),
        "Draws an instance. Defaults to the corrupted-bias ferromagnet tables.");

  m.def("solve",
        [](const IsingModel& model, const std::string& solver, std::uint64_t seed, int reads) {
          SolverDefaults d;
          d.reads = reads;
          const auto s = run_solver(model, parse_solver_spec(solver), seed, d);
          py::list out;
          for (const auto& r : s.records)
            out.append(py::make_tuple(r.state, r.energy, r.count));
          return out;
        },
        py::arg("model"), py::arg("solver") = "sa", py::arg("seed") = 0, py::arg("reads") = 100,
        "Returns a list of (state, energy, count) records.");

  m.def("relative_difference",
        [](const std::vector<double>& candidate, const std::vector<double>& baseline) {
          auto to_set = [](const std::vector<double>& e) {
            SampleSet s;
            for (double v : e) s.records.push_back({{}, v, 1});
            return s;
          };
          return relative_difference(to_set(candidate), to_set(baseline)).rl_values;
        },
        py::arg("candidate"), py::arg("baseline"));

  m.def("kp_hardness",
        [](const std::string& text, std::optional<double> lambda) {
          const auto kp = parse_kp(text);
          const auto h = kp_hardness(kp, lambda.value_or(default_lambda(kp)));
          py::dict d;
          d["qubo"] = hardness_dict(h.qubo);
          d["ising"] = hardness_dict(h.ising);
          return d;
        },
        py::arg("text"), py::arg("lam") = py::none(),
        "Hardness ratios of a knapsack instance given in the .kp text format.");

  m.def("kp_ranges", [](const std::string& text) {
    const auto r = coefficient_ranges(parse_kp(text));
    py::dict d;
    d["len_h"] = r.len_h;
    d["len_j"] = r.len_j;
    d["threshold_c"] = r.threshold_c;
    d["dominance"] = r.dominance;
    return d;
  });

  m.def("kp_solve", [](const std::string& text) {
    const auto s = solve_kp_exact(parse_kp(text));
    return py::make_tuple(s.profit, s.selection);
  });

  m.def("range_cdf",
        [](const std::string& weights, int n, double x, const std::string& mode,
           std::optional<std::string> capacity) {
          return orderstats::statistic_cdf(orderstats::parse_continuous(weights),
                                           maybe_law(capacity), n,
                                           orderstats::range_mode_from_string(mode), x);
        },
        py::arg("weights"), py::arg("n"), py::arg("x"), py::arg("mode") = "range",
        py::arg("capacity") = py::none());

  m.def("range_monte_carlo",
        [](const std::string& weights, int n, std::size_t samples, std::uint64_t seed,
           const std::string& mode, std::optional<std::string> capacity) {
          return orderstats::monte_carlo_range(orderstats::parse_continuous(weights),
                                               maybe_law(capacity), n,
                                               orderstats::range_mode_from_string(mode), samples,
                                               seed);
        },
        py::arg("weights"), py::arg("n"), py::arg("samples"), py::arg("seed") = 0,
        py::arg("mode") = "range", py::arg("capacity") = py::none(),
        "Sorted Monte Carlo draws of the statistic.");
}
