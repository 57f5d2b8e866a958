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

// isingbench command-line driver.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isingbench/error.hpp"
#include "isingbench/generator.hpp"
#include "isingbench/knapsack.hpp"
#include "isingbench/metrics.hpp"
#include "isingbench/orderstats.hpp"
#include "isingbench/random.hpp"
#include "isingbench/report.hpp"
#include "isingbench/serialization.hpp"
#include "isingbench/solvers.hpp"
#include "isingbench/specs.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace isingbench;

namespace {

// Bad flags or specs. Reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 0;
  int threads = 1;
  std::string out = ".";
  std::string format = "csv";
};

// Rebuilds the command from parsed options, skipping flags that do not affect
// results (--threads, --out), so it can be embedded in deterministic files.
std::string canonical_command(const CLI::App& root, const CLI::App& sub) {
  std::ostringstream os;
  os << "isingbench " << sub.get_name();
  auto emit = [&](const CLI::App& app) {
    for (const CLI::Option* opt : app.get_options()) {
      const std::string name = opt->get_name();
      if (opt->count() == 0 || name == "--help" || name == "--threads" || name == "--out") {
        continue;
      }
      if (opt->get_type_size_max() == 0 || opt->get_items_expected_max() == 0) {
        os << " " << name;
        continue;
      }
      for (const auto& v : opt->results()) os << " " << name << " " << v;
    }
  };
  emit(root);
  emit(sub);
  return os.str();
}

class Run {
 public:
  Run(const Globals& g, std::string command, std::vector<std::string> argv)
      : globals_(g), argv_(std::move(argv)) {
    prov_.tool_version = ISINGBENCH_VERSION;
    prov_.command = std::move(command);
    prov_.seed = g.seed;
  }

  const report::Provenance& provenance() const { return prov_; }
  const Globals& globals() const { return globals_; }
  bool json_format() const { return globals_.format == "json"; }

  std::string path(const std::string& name) const { return (fs::path(globals_.out) / name).string(); }

  void write(const std::string& name, std::string_view content) {
    const fs::path p = fs::path(globals_.out) / name;
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    write_file(p.string(), content);
    files_.push_back(name);
  }

  void write_json(const std::string& name, const json& doc) { write(name, doc.dump(2) + "\n"); }

  // Tabular output as CSV with a comment preamble, or as a JSON document.
  void write_table(const std::string& stem, const std::vector<std::string>& columns,
                   const std::vector<std::vector<std::string>>& rows,
                   const std::vector<std::vector<json>>& json_rows) {
    if (json_format()) {
      json doc = {{"meta", report::provenance_json(prov_)}, {"columns", columns}};
      json arr = json::array();
      for (const auto& r : json_rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = r[i];
        arr.push_back(obj);
      }
      doc["rows"] = arr;
      write_json(stem + ".json", doc);
      return;
    }
    std::string text = report::csv_preamble(prov_);
    for (std::size_t i = 0; i < columns.size(); ++i) text += (i ? "," : "") + columns[i];
    text += "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) text += (i ? "," : "") + report::csv_escape(r[i]);
      text += "\n";
    }
    write(stem + ".csv", text);
  }

  void finish() {
    write_json("manifest.json", report::manifest(prov_, argv_, files_));
  }

 private:
  Globals globals_;
  report::Provenance prov_;
  std::vector<std::string> argv_;
  std::vector<std::string> files_;
};

// Collects rows for Run::write_table in both renderings at once.
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}
  Table& cell(const std::string& s) {
    row_.push_back(s);
    jrow_.push_back(s);
    return *this;
  }
  Table& cell(double v) {
    row_.push_back(report::format_double(v));
    jrow_.push_back(std::isfinite(v) ? json(v) : json(nullptr));
    return *this;
  }
  Table& cell(std::int64_t v) {
    row_.push_back(std::to_string(v));
    jrow_.push_back(v);
    return *this;
  }
  Table& cell(std::size_t v) { return cell(static_cast<std::int64_t>(v)); }
  Table& cell(bool v) {
    row_.push_back(v ? "true" : "false");
    jrow_.push_back(v);
    return *this;
  }
  Table& empty() {
    row_.emplace_back();
    jrow_.push_back(nullptr);
    return *this;
  }
  void end_row() {
    rows_.push_back(std::move(row_));
    jrows_.push_back(std::move(jrow_));
    row_.clear();
    jrow_.clear();
  }
  void write(Run& run, const std::string& stem) const { run.write_table(stem, columns_, rows_, jrows_); }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<std::string> columns_;
  std::vector<std::string> row_;
  std::vector<json> jrow_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::vector<json>> jrows_;
};

template <typename F>
auto as_usage(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  } catch (const RangeError& e) {
    throw UsageError(e.what());
  }
}

std::string ratio_text(const HardnessReport& r) {
  return r.ratio ? report::format_double(*r.ratio) : std::string("undefined");
}

// ---------------------------------------------------------------- generate

struct GenerateOptions {
  std::string topology;
  std::string preset;
  std::optional<double> hardness;
  std::string h_spec, j_spec;
  int count = 1;
  std::string name = "instance";
};

void add_generate(CLI::App& app, GenerateOptions& o) {
  app.add_option("--topology", o.topology, "chimera:M,N,T | pegasus:M | zephyr:M,T | file:PATH")
      ->required();
  app.add_option("--preset", o.preset, "Coefficient preset")->check(CLI::IsMember({"cbfm"}));
  app.add_option("--hardness", o.hardness, "Uniform family with sigma_h/sigma_J = F (0 < F <= 4)");
  app.add_option("--h-dist", o.h_spec, "Field distribution, e.g. uniform:-1,1");
  app.add_option("--j-dist", o.j_spec, "Coupling distribution, e.g. discrete:-1=0.5,1=0.5");
  app.add_option("--count", o.count, "Number of instances; instance k uses seed + k")
      ->check(CLI::PositiveNumber);
  app.add_option("--name", o.name, "Output file stem");
}

int run_generate(Run& run, const GenerateOptions& o) {
  const int sources = (!o.preset.empty()) + o.hardness.has_value() +
                      (!o.h_spec.empty() || !o.j_spec.empty());
  if (sources != 1) throw UsageError("give exactly one of --preset, --hardness or --h-dist/--j-dist");
  const DistributionPair dists = as_usage([&] {
    if (!o.preset.empty()) return cbfm_distributions();
    if (o.hardness) return uniform_hardness_family(*o.hardness);
    if (o.h_spec.empty() || o.j_spec.empty()) throw UsageError("--h-dist and --j-dist go together");
    return DistributionPair{parse_distribution(o.h_spec), parse_distribution(o.j_spec)};
  });
  const GraphPtr graph = as_usage([&] { return parse_topology(o.topology); });
  const json meta = report::provenance_json(run.provenance());
  for (int k = 0; k < o.count; ++k) {
    const std::uint64_t seed = run.globals().seed + static_cast<std::uint64_t>(k);
    const IsingModel model = as_usage([&] {
      return generate_instance(graph, dists.h, dists.j, seed, kDefaultHRange, kDefaultJRange,
                               run.globals().threads);
    });
    char suffix[32] = "";
    if (o.count > 1) std::snprintf(suffix, sizeof suffix, "_%03d", k);
    const std::string file = o.name + suffix + ".json";
    run.write_json(file, instance_to_json(model, seed, meta));
    std::string f = "undefined";
    try {
      f = ratio_text(hardness_ratio(model));
    } catch (const ParameterError&) {
    }
    std::cout << file << ": nodes " << graph->num_nodes() << ", edges " << graph->num_edges()
              << ", F " << f << "\n";
  }
  run.finish();
  return 0;
}

// ---------------------------------------------------------------- solve

struct SolveOptions {
  std::string instance;
  std::string solver = "sa";
  int reads = 100;
  std::optional<int> sweeps;
  std::string output = "samples.json";
};

void add_solve(CLI::App& app, SolveOptions& o) {
  app.add_option("--instance", o.instance, "Instance JSON, or - for standard input")
      ->required()
      ->check(CLI::ExistingFile | CLI::IsMember({"-"}));
  app.add_option("--solver", o.solver, "exact | sa[:k=v,...] | sqa[:k=v,...] | external:cmd=...");
  app.add_option("--reads", o.reads, "Default number of reads")->check(CLI::PositiveNumber);
  app.add_option("--sweeps", o.sweeps, "Default sweeps per read")->check(CLI::PositiveNumber);
  app.add_option("--output", o.output, "Sample file name inside --out, or - for standard output");
}

std::string read_input(const std::string& path) {
  if (path != "-") return read_file(path);
  std::ostringstream os;
  os << std::cin.rdbuf();
  return os.str();
}

// With --output - the sample set goes to stdout and nothing is written to
// --out, so the command can serve as an external solver.
int run_solve(Run& run, const SolveOptions& o) {
  const LoadedInstance inst = instance_from_json(json::parse(read_input(o.instance)));
  const SolverSpec spec = as_usage([&] { return parse_solver_spec(o.solver); });
  const SampleSet samples =
      run_solver(inst.model, spec, run.globals().seed, {o.reads, o.sweeps, run.globals().threads});
  const json doc = samples_to_json(samples, report::provenance_json(run.provenance()));
  if (o.output == "-") {
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  run.write_json(o.output, doc);
  std::cout << o.output << ": " << samples.total_count() << " samples, min energy "
            << report::format_double(samples.min_energy()) << "\n";
  run.finish();
  return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string instance;
  std::string samples;
  double tolerance = 1e-9;
};

void add_verify(CLI::App& app, VerifyOptions& o) {
  app.add_option("--instance", o.instance, "Instance JSON")->required()->check(CLI::ExistingFile);
  app.add_option("--samples", o.samples, "Sample JSON")->required()->check(CLI::ExistingFile);
  app.add_option("--tolerance", o.tolerance, "Relative energy tolerance");
}

int run_verify(const VerifyOptions& o) {
  const LoadedInstance inst = instance_from_json(json::parse(read_file(o.instance)));
  const SampleSet samples = samples_from_json(json::parse(read_file(o.samples)));
  verify_samples(inst.model, samples, o.tolerance);
  std::cout << "ok: " << samples.records.size() << " records, " << samples.total_count()
            << " samples, min energy " << report::format_double(samples.min_energy()) << "\n";
  return 0;
}

// ---------------------------------------------------------------- benchmark

struct BenchmarkOptions {
  std::vector<std::string> instances;
  std::vector<std::string> candidates;
  std::string baseline = "sa";
  int reads = 100;
  std::optional<int> sweeps;
  std::vector<int> anneal_times;
};

void add_benchmark(CLI::App& app, BenchmarkOptions& o) {
  app.add_option("--instances", o.instances, "Instance JSON files")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--candidate", o.candidates, "Candidate solver spec (repeatable)")->required();
  app.add_option("--baseline", o.baseline, "Baseline solver spec");
  app.add_option("--reads", o.reads, "Default reads per solver run")->check(CLI::PositiveNumber);
  app.add_option("--sweeps", o.sweeps, "Default sweeps per read")->check(CLI::PositiveNumber);
  app.add_option("--anneal-times", o.anneal_times,
                 "Candidate sweep counts standing in for annealing times")
      ->check(CLI::PositiveNumber);
}

int run_benchmark(Run& run, const BenchmarkOptions& o) {
  const SolverSpec baseline = as_usage([&] { return parse_solver_spec(o.baseline); });
  std::vector<SolverSpec> candidates;
  for (const auto& c : o.candidates) candidates.push_back(as_usage([&] { return parse_solver_spec(c); }));
  const auto& g = run.globals();
  const json meta = report::provenance_json(run.provenance());

  Table rl({"instance", "candidate", "baseline", "anneal_time", "baseline_min", "count", "min",
            "q1", "median", "mean", "q3", "max", "status", "message"});
  Table cons({"solver", "instance", "group_key", "group_min", "mean_gap", "q1_gap", "q3_gap",
              "samples"});
  std::vector<report::BoxSeries> boxes;
  std::vector<report::BandSeries> bands;
  // Without annealing times, each solver's groups are keyed by instance F.
  std::vector<std::map<double, SampleSet>> by_f(candidates.size() + 1);
  std::size_t ok_rows = 0;

  auto add_consistency = [&](const std::string& solver, const std::string& instance,
                             const std::map<double, SampleSet>& groups) {
    const auto rep = consistency_report(groups);
    report::BandSeries band{solver + (instance.empty() ? "" : " " + instance), {}, {}, {}, {}};
    for (const auto& row : rep.rows) {
      cons.cell(solver).cell(instance).cell(row.group_key).cell(row.group_min).cell(row.mean_gap)
          .cell(row.q1_gap).cell(row.q3_gap).cell(row.samples).end_row();
      band.x.push_back(row.group_key);
      band.center.push_back(row.mean_gap);
      band.lower.push_back(row.q1_gap);
      band.upper.push_back(row.q3_gap);
    }
    for (double key : rep.skipped_groups) {
      std::cerr << "warning: empty group " << key << " for " << solver << "\n";
    }
    bands.push_back(std::move(band));
  };

  for (std::size_t i = 0; i < o.instances.size(); ++i) {
    const std::string name = fs::path(o.instances[i]).stem().string();
    const std::uint64_t inst_seed = derive_seed(g.seed, streams::kSolver, i);
    auto error_row = [&](const std::string& cand, const std::string& t, const std::string& status,
                         const std::string& msg) {
      rl.cell(name).cell(cand).cell(baseline.text).cell(t);
      for (int k = 0; k < 8; ++k) rl.empty();
      rl.cell(status).cell(msg).end_row();
    };
    try {
      const LoadedInstance inst = instance_from_json(json::parse(read_file(o.instances[i])));
      const SolverDefaults defaults{o.reads, o.sweeps, g.threads};
      const SampleSet base = run_solver(inst.model, baseline, derive_seed(inst_seed, 0, 0), defaults);
      run.write_json("samples/" + name + "__baseline.json", samples_to_json(base, meta));
      std::optional<double> f;
      try {
        f = hardness_ratio(inst.model).ratio;
      } catch (const ParameterError&) {
      }
      if (f && o.anneal_times.empty()) by_f[0].emplace(*f, base);

      for (std::size_t c = 0; c < candidates.size(); ++c) {
        std::vector<std::optional<int>> times;
        if (o.anneal_times.empty()) times.push_back(std::nullopt);
        for (int t : o.anneal_times) times.push_back(t);
        std::map<double, SampleSet> by_time;
        for (std::size_t ti = 0; ti < times.size(); ++ti) {
          SolverDefaults d = defaults;
          if (times[ti]) d.sweeps = *times[ti];
          const std::string t = times[ti] ? std::to_string(*times[ti]) : "";
          SolverSpec spec = candidates[c];
          if (times[ti]) spec.params.erase("sweeps");
          const SampleSet cand = run_solver(inst.model, spec, derive_seed(inst_seed, c + 1, ti), d);
          run.write_json("samples/" + name + "__c" + std::to_string(c + 1) +
                             (t.empty() ? "" : "_t" + t) + ".json",
                         samples_to_json(cand, meta));
          if (times[ti]) by_time.emplace(*times[ti], cand);
          if (f && !times[ti]) by_f[c + 1].emplace(*f, cand);
          try {
            const RlSummary s = relative_difference(cand, base);
            rl.cell(name).cell(spec.text).cell(baseline.text).cell(t).cell(s.baseline_min)
                .cell(s.stats.count).cell(s.stats.min).cell(s.stats.q1).cell(s.stats.median)
                .cell(s.stats.mean).cell(s.stats.q3).cell(s.stats.max).cell(std::string("ok"))
                .cell(std::string("")).end_row();
            boxes.push_back({name + (t.empty() ? "" : " t=" + t) +
                                 (candidates.size() > 1 ? " c" + std::to_string(c + 1) : ""),
                             s.stats});
            ++ok_rows;
          } catch (const UndefinedMetricError& e) {
            error_row(spec.text, t, "undefined", e.what());
          }
        }
        if (!by_time.empty()) add_consistency(candidates[c].text, name, by_time);
      }
    } catch (const Error& e) {
      std::cerr << "error: " << name << ": " << e.what() << "\n";
      for (const auto& c : candidates) error_row(c.text, "", "error", e.what());
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "error: " << name << ": " << e.what() << "\n";
      for (const auto& c : candidates) error_row(c.text, "", "error", e.what());
    }
  }
  if (o.anneal_times.empty()) {
    if (!by_f[0].empty()) add_consistency(baseline.text + " (baseline)", "", by_f[0]);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (!by_f[c + 1].empty()) add_consistency(candidates[c].text, "", by_f[c + 1]);
    }
  }

  rl.write(run, "rl");
  cons.write(run, "consistency");
  run.write("rl_boxplot.svg",
            report::svg_boxplot(boxes, {"Relative difference to baseline minimum", "instance", "RL"},
                                run.provenance()));
  run.write("consistency.svg",
            report::svg_band(bands,
                             {"Gap to group minimum (mean, quartile band)",
                              o.anneal_times.empty() ? "hardness ratio F" : "annealing sweeps",
                              "energy gap"},
                             run.provenance()));
  run.finish();
  std::cout << ok_rows << " of " << rl.size() << " comparisons succeeded\n";
  return ok_rows > 0 ? 0 : 1;
}

// ---------------------------------------------------------------- kp

struct KpOptions {
  std::vector<std::string> inputs;
  std::optional<double> lambda;
  int bins = 50;
  int synthetic = 0;
  SyntheticKpConfig synth;
};

void add_kp(CLI::App& app, KpOptions& o) {
  app.add_option("--input", o.inputs, "Instance files or directories")->check(CLI::ExistingPath);
  app.add_option("--lambda", o.lambda, "Penalty weight (default 1 + max profit)")
      ->check(CLI::PositiveNumber);
  app.add_option("--bins", o.bins, "Histogram bins")->check(CLI::PositiveNumber);
  app.add_option("--synthetic", o.synthetic, "Generate this many synthetic instances")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--items", o.synth.n, "Items per synthetic instance")->check(CLI::PositiveNumber);
  app.add_option("--weight-mean", o.synth.weight_mean, "Synthetic weight mean");
  app.add_option("--weight-sd", o.synth.weight_sd, "Synthetic weight standard deviation");
}

std::vector<KpSource> collect_kp_sources(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const auto& in : inputs) {
    if (fs::is_directory(in)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(in)) {
        if (entry.is_regular_file() && entry.path().filename().string()[0] != '.') {
          found.push_back(entry.path());
        }
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.emplace_back(in);
    }
  }
  std::vector<KpSource> sources;
  for (const auto& f : files) sources.push_back({f.filename().string(), read_file(f.string())});
  return sources;
}

int run_kp(Run& run, const KpOptions& o) {
  if (o.inputs.empty() && o.synthetic == 0) throw UsageError("give --input or --synthetic");
  std::vector<KpSource> sources = collect_kp_sources(o.inputs);
  for (int k = 0; k < o.synthetic; ++k) {
    const auto inst = as_usage([&] { return synthetic_kp(o.synth, run.globals().seed, k); });
    char name[32];
    std::snprintf(name, sizeof name, "kp_%05d.kp", k);
    const std::string text = format_kp(inst);
    run.write(std::string("kp_instances/") + name, text);
    sources.push_back({name, text});
  }
  const KpBatchResult result = batch_hardness(sources, o.lambda, o.bins, run.globals().threads);
  for (const auto& f : result.failures) std::cerr << "warning: " << f.name << ": " << f.message << "\n";

  Table rows({"file", "n", "C", "lambda", "sigma_h_qubo", "sigma_J_qubo", "F_qubo",
              "sigma_h_ising", "sigma_J_ising", "F_ising", "dominance"});
  std::size_t qubo_above = 0, ising_above = 0;
  for (const auto& r : result.rows) {
    auto ratio = [&](const HardnessReport& h) -> Table& {
      return h.ratio ? rows.cell(*h.ratio) : rows.cell(std::string("undefined"));
    };
    rows.cell(r.name).cell(r.n).cell(r.capacity).cell(r.lambda).cell(r.hardness.qubo.sigma_h)
        .cell(r.hardness.qubo.sigma_j);
    ratio(r.hardness.qubo).cell(r.hardness.ising.sigma_h).cell(r.hardness.ising.sigma_j);
    ratio(r.hardness.ising).cell(r.dominance).end_row();
    qubo_above += r.hardness.qubo.ratio && *r.hardness.qubo.ratio > 1.0;
    ising_above += r.hardness.ising.ratio && *r.hardness.ising.ratio > 1.0;
  }
  rows.write(run, "kp_hardness");
  Table fails({"file", "message"});
  for (const auto& f : result.failures) fails.cell(f.name).cell(f.message).end_row();
  fails.write(run, "kp_failures");
  auto emit_hist = [&](const std::optional<Histogram>& h, const std::string& stem,
                       const std::string& title) {
    if (!h) return;
    Table t({"bin_lo", "bin_hi", "count"});
    for (std::size_t i = 0; i < h->counts.size(); ++i) {
      t.cell(h->edges[i]).cell(h->edges[i + 1]).cell(h->counts[i]).end_row();
    }
    t.write(run, stem);
    run.write(stem + ".svg", report::svg_histogram(*h, {title, "hardness ratio F", "instances"},
                                                   run.provenance()));
  };
  emit_hist(result.qubo_histogram, "kp_histogram_qubo", "Knapsack QUBO hardness ratios");
  emit_hist(result.ising_histogram, "kp_histogram_ising", "Knapsack Ising hardness ratios");
  run.finish();
  const double n = static_cast<double>(std::max<std::size_t>(1, result.rows.size()));
  std::cout << result.rows.size() << " instances, " << result.failures.size() << " skipped; F>1: qubo "
            << report::format_double(qubo_above / n) << ", ising "
            << report::format_double(ising_above / n) << "\n";
  return result.rows.empty() ? 1 : 0;
}

// ---------------------------------------------------------------- orderstats

struct OrderstatsOptions {
  std::string weights;
  std::string capacity;
  int n = 2;
  std::string mode = "range";
  int points = 100;
  std::size_t mc_samples = 100000;
  bool svg = false;
  bool tail = false;
};

void add_orderstats(CLI::App& app, OrderstatsOptions& o) {
  app.add_option("--weights", o.weights, "Weight law, e.g. uniform:0,1 or truncated_normal:50,15,1,inf")
      ->required();
  app.add_option("--capacity", o.capacity, "Capacity law for scaled_range");
  app.add_option("--n", o.n, "Sample size")->check(CLI::Range(2, 1 << 20));
  app.add_option("--mode", o.mode, "Statistic")
      ->check(CLI::IsMember({"range", "scaled_range", "squared_range"}));
  app.add_option("--points", o.points, "Grid points")->check(CLI::Range(2, 1 << 20));
  app.add_option("--mc-samples", o.mc_samples, "Monte Carlo draws (0 disables, else >= 1000)");
  app.add_flag("--svg", o.svg, "Also plot the c.d.f.");
  app.add_flag("--tail-report", o.tail, "Compare scaled and squared range tails");
}

int run_orderstats(Run& run, const OrderstatsOptions& o) {
  using namespace orderstats;
  const RangeMode mode = range_mode_from_string(o.mode);
  const auto w = as_usage([&] { return parse_continuous(o.weights); });
  std::optional<ContinuousDistribution> c;
  if (!o.capacity.empty()) c = as_usage([&] { return parse_continuous(o.capacity); });
  if ((mode == RangeMode::kScaledRange || o.tail) && !c) {
    throw UsageError("scaled_range and --tail-report need --capacity");
  }
  if (o.mc_samples != 0 && o.mc_samples < 1000) throw UsageError("--mc-samples must be 0 or >= 1000");
  const auto rows = as_usage([&] {
    return evaluate_grid(w, c, o.n, mode, o.points, o.mc_samples, run.globals().seed, {},
                         run.globals().threads);
  });
  Table t({"x", "cdf", "pdf", "mc_cdf", "abs_diff", "converged", "note"});
  double sup = 0.0;
  std::size_t failed = 0;
  for (const auto& r : rows) {
    t.cell(r.x).cell(r.cdf).cell(r.pdf);
    if (o.mc_samples) {
      t.cell(r.mc_cdf).cell(r.abs_diff);
    } else {
      t.empty().empty();
    }
    t.cell(r.converged).cell(r.note).end_row();
    sup = std::max(sup, r.abs_diff);
    failed += !r.converged;
  }
  t.write(run, "orderstats_" + o.mode);
  if (o.svg) {
    std::vector<report::LineSeries> lines(1);
    lines[0].label = "quadrature";
    for (const auto& r : rows) {
      lines[0].x.push_back(r.x);
      lines[0].y.push_back(r.cdf);
    }
    if (o.mc_samples) {
      lines.push_back({"Monte Carlo", lines[0].x, {}});
      for (const auto& r : rows) lines[1].y.push_back(r.mc_cdf);
    }
    run.write("orderstats_" + o.mode + ".svg",
              report::svg_lines(lines, {"c.d.f. of the " + o.mode + " statistic", "x", "P(X <= x)"},
                                run.provenance()));
  }
  if (o.tail) {
    const auto rep = tail_behavior_report(w, *c, o.n);
    json doc = {{"meta", report::provenance_json(run.provenance())},
                {"scaled_q50", rep.scaled_q50},
                {"scaled_q99", rep.scaled_q99},
                {"squared_q50", rep.squared_q50},
                {"squared_q99", rep.squared_q99},
                {"scaled_range_tail_width", rep.scaled_range_tail_width},
                {"squared_range_tail_width", rep.squared_range_tail_width},
                {"comparison", rep.comparison}};
    run.write_json("tail_report.json", doc);
    std::cout << "tail widths: scaled " << report::format_double(rep.scaled_range_tail_width)
              << ", squared " << report::format_double(rep.squared_range_tail_width) << " ("
              << rep.comparison << ")\n";
  }
  run.finish();
  std::cout << rows.size() << " grid points";
  if (o.mc_samples) std::cout << ", sup |cdf - mc_cdf| = " << report::format_double(sup);
  if (failed) std::cout << ", " << failed << " unconverged";
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hardware-native Ising benchmarks, hardness ratios and order statistics"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Master seed");
  app.add_option("--threads", g.threads, "Worker threads (results do not depend on it)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Output directory");
  app.add_option("--format", g.format, "Tabular output format")->check(CLI::IsMember({"csv", "json"}));
  app.set_version_flag("--version", std::string(ISINGBENCH_VERSION));

  GenerateOptions gen;
  SolveOptions solve;
  VerifyOptions verify;
  BenchmarkOptions bench;
  KpOptions kp;
  OrderstatsOptions os;
  auto* c_gen = app.add_subcommand("generate", "Generate hardware-native instances");
  add_generate(*c_gen, gen);
  auto* c_bench = app.add_subcommand("benchmark", "Compare solvers with the RL metric");
  add_benchmark(*c_bench, bench);
  auto* c_kp = app.add_subcommand("kp", "Knapsack hardness ratios");
  add_kp(*c_kp, kp);
  auto* c_os = app.add_subcommand("orderstats", "Range-statistic c.d.f. grids");
  add_orderstats(*c_os, os);
  auto* c_solve = app.add_subcommand("solve", "Run one solver on one instance");
  add_solve(*c_solve, solve);
  auto* c_verify = app.add_subcommand("verify", "Re-check sample energies against an instance");
  add_verify(*c_verify, verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::vector<std::string> args(argv, argv + argc);
  try {
    if (c_verify->parsed()) return run_verify(verify);
    CLI::App* sub = app.get_subcommands().front();
    Run run(g, canonical_command(app, *sub), args);
    if (c_gen->parsed()) return run_generate(run, gen);
    if (c_bench->parsed()) return run_benchmark(run, bench);
    if (c_kp->parsed()) return run_kp(run, kp);
    if (c_os->parsed()) return run_orderstats(run, os);
    if (c_solve->parsed()) return run_solve(run, solve);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
