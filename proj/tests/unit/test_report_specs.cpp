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
#include <cstdlib>
#include <limits>

#include "isingbench/error.hpp"
#include "isingbench/report.hpp"
#include "isingbench/specs.hpp"
#include "oracles.hpp"

namespace isingbench {
namespace {

TEST(Format, ShortestRoundTrip) {
  EXPECT_EQ(report::format_double(0.1), "0.1");
  EXPECT_EQ(report::format_double(-2.0), "-2");
  const double third = 1.0 / 3.0;
  EXPECT_EQ(std::stod(report::format_double(third)), third);
  EXPECT_EQ(report::format_double(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(report::format_double(std::nan("")), "nan");
}

TEST(Format, Escaping) {
  EXPECT_EQ(report::csv_escape("plain"), "plain");
  EXPECT_EQ(report::csv_escape("a,b"), "\"a,b\"");
  EXPECT_EQ(report::csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(report::xml_escape("<a & \"b\">"), "&lt;a &amp; &quot;b&quot;&gt;");
}

TEST(Provenance, PreambleAndTimestamp) {
  const report::Provenance p{"1.2.3", "isingbench kp --bins 5", 9};
  const auto text = report::csv_preamble(p);
  EXPECT_NE(text.find("# command: isingbench kp --bins 5\n"), std::string::npos);
  EXPECT_NE(text.find("# seed: 9\n"), std::string::npos);
  setenv("SOURCE_DATE_EPOCH", "86400", 1);
  EXPECT_EQ(report::utc_timestamp(), "1970-01-02T00:00:00Z");
  const auto m = report::manifest(p, {"isingbench", "kp"}, {"a.csv"});
  EXPECT_EQ(m.at("timestamp"), "1970-01-02T00:00:00Z");
  EXPECT_EQ(m.at("files")[0], "a.csv");
  unsetenv("SOURCE_DATE_EPOCH");
}

TEST(Svg, WellFormedAndDeterministic) {
  const report::Provenance p{"0", "cmd --x", 1};
  SummaryStats s;
  s.count = 4;
  s.min = -0.1;
  s.q1 = 0;
  s.median = 0.02;
  s.mean = 0.03;
  s.q3 = 0.05;
  s.max = 0.2;
  const auto a = report::svg_boxplot({{"sqa & co", s}}, {"t", "x", "y"}, p);
  EXPECT_EQ(a, report::svg_boxplot({{"sqa & co", s}}, {"t", "x", "y"}, p));
  EXPECT_NE(a.find("<svg"), std::string::npos);
  EXPECT_NE(a.find("</svg>"), std::string::npos);
  EXPECT_NE(a.find("sqa &amp; co"), std::string::npos);
  EXPECT_EQ(a.find("<!--"), std::string::npos);
  report::LineSeries line{"cdf", {0, 1, 2}, {0, 0.5, 1}};
  EXPECT_NE(report::svg_lines({line}, {"t", "x", "y"}, p).find("<polyline"), std::string::npos);
}

TEST(Specs, Topologies) {
  EXPECT_EQ(parse_topology("chimera:2")->num_nodes(), 32u);
  EXPECT_EQ(parse_topology("chimera:1,2,3")->num_nodes(), 12u);
  EXPECT_EQ(parse_topology("pegasus:2")->num_nodes(), 40u);
  EXPECT_EQ(parse_topology("zephyr:1,2")->num_nodes(), build_zephyr(1, 2).num_nodes());
  EXPECT_THROW(parse_topology("torus:3"), ParameterError);
  EXPECT_THROW(parse_topology("chimera:x"), ParameterError);
  EXPECT_THROW(parse_topology("chimera:"), ParameterError);
}

TEST(Specs, SolverStrings) {
  const auto s = parse_solver_spec("sa:reads=5,sweeps=30");
  EXPECT_EQ(s.name, "sa");
  EXPECT_EQ(s.params.at("reads"), "5");
  const auto e = parse_solver_spec("external:tol=1e-6,cmd=python3 run.py --a=1,2");
  EXPECT_EQ(e.params.at("cmd"), "python3 run.py --a=1,2");
  EXPECT_EQ(e.params.at("tol"), "1e-6");
  EXPECT_THROW(parse_solver_spec("sa:reads"), ParameterError);
  EXPECT_THROW(parse_solver_spec(""), ParameterError);
}

TEST(Specs, RunSolver) {
  const auto m = testing::random_model(testing::complete_graph(6), 4);
  const double ground = testing::brute_min(m);
  EXPECT_DOUBLE_EQ(run_solver(m, parse_solver_spec("exact"), 1).min_energy(), ground);
  const auto sa = run_solver(m, parse_solver_spec("sa:reads=7,sweeps=200"), 1);
  EXPECT_EQ(sa.total_count(), 7);
  EXPECT_DOUBLE_EQ(sa.min_energy(), ground);
  SolverDefaults d;
  d.reads = 3;
  EXPECT_EQ(run_solver(m, parse_solver_spec("sqa:slices=4,sweeps=50"), 1, d).total_count(), 3);
  EXPECT_THROW(run_solver(m, parse_solver_spec("sa:bogus=1"), 1), ParameterError);
  EXPECT_THROW(run_solver(m, parse_solver_spec("annealer"), 1), ParameterError);
}

}  // namespace
}  // namespace isingbench
