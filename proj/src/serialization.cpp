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

#include "isingbench/serialization.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "isingbench/error.hpp"

namespace isingbench {

using nlohmann::json;

namespace {

json range_to_json(Interval r) {
  json out = json::array();
  out.push_back(std::isinf(r.lo) ? json(nullptr) : json(r.lo));
  out.push_back(std::isinf(r.hi) ? json(nullptr) : json(r.hi));
  return out;
}

Interval range_from_json(const json& doc, const char* key) {
  if (!doc.is_array() || doc.size() != 2) {
    throw ParseError(std::string("'") + key + "' must be a two-element array", 0);
  }
  const double inf = std::numeric_limits<double>::infinity();
  return {doc[0].is_null() ? -inf : doc[0].get<double>(),
          doc[1].is_null() ? inf : doc[1].get<double>()};
}

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ParseError(std::string("missing key '") + key + "'", 0);
  }
  return doc.at(key);
}

void require_format(const json& doc, const char* expected) {
  const auto& f = require(doc, "format");
  if (!f.is_string() || f.get<std::string>() != expected) {
    throw ParseError(std::string("expected format '") + expected + "'", 0);
  }
}

int parse_index(const std::string& key) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), value);
  if (ec != std::errc() || ptr != key.data() + key.size() || value < 0) {
    throw ParseError("invalid index key '" + key + "'", 0);
  }
  return value;
}

}  // namespace

json instance_to_json(const IsingModel& model, std::uint64_t seed, const json& meta) {
  const auto& g = model.graph();
  json graph;
  graph["family"] = std::string(to_string(g.family()));
  graph["params"] = g.params();
  json nodes = json::array();
  for (int i = 0; i < g.num_nodes(); ++i) nodes.push_back(i);
  graph["nodes"] = std::move(nodes);
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  graph["edges"] = std::move(edges);

  json h = json::object();
  for (int i = 0; i < g.num_nodes(); ++i) h[std::to_string(i)] = model.h()[i];
  json j = json::array();
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    j.push_back({g.edges()[e].first, g.edges()[e].second, model.j()[e]});
  }

  json doc;
  doc["format"] = "ising-v1";
  doc["graph"] = std::move(graph);
  doc["h"] = std::move(h);
  doc["J"] = std::move(j);
  doc["h_range"] = range_to_json(model.h_range());
  doc["J_range"] = range_to_json(model.j_range());
  doc["seed"] = seed;
  if (!meta.empty()) doc["meta"] = meta;
  return doc;
}

LoadedInstance instance_from_json(const json& doc) {
  try {
    require_format(doc, "ising-v1");
    const auto& graph = require(doc, "graph");
    const auto family = topology_family_from_string(require(graph, "family").get<std::string>());
    auto params = graph.value("params", std::vector<std::int64_t>{});
    const auto& nodes = require(graph, "nodes");
    const int n = static_cast<int>(nodes.size());
    for (int i = 0; i < n; ++i) {
      if (nodes[i].get<int>() != i) throw ParseError("node ids must be 0..N-1 in order", 0);
    }
    std::vector<Edge> edges;
    for (const auto& e : require(graph, "edges")) {
      edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    auto g = std::make_shared<const HardwareGraph>(family, std::move(params), n, std::move(edges));

    std::vector<double> h(n, 0.0);
    for (const auto& [key, value] : require(doc, "h").items()) {
      const int i = parse_index(key);
      if (i >= n) throw ParseError("h key " + key + " is not a node", 0);
      h[i] = value.get<double>();
    }
    std::vector<double> j(g->num_edges(), 0.0);
    for (const auto& entry : require(doc, "J")) {
      const int e = g->find_edge(entry.at(0).get<int>(), entry.at(1).get<int>());
      if (e < 0) throw ParseError("J entry on a non-edge", 0);
      j[e] = entry.at(2).get<double>();
    }
    LoadedInstance out;
    out.model = IsingModel(std::move(g), std::move(h), std::move(j),
                           range_from_json(require(doc, "h_range"), "h_range"),
                           range_from_json(require(doc, "J_range"), "J_range"));
    out.seed = doc.value("seed", std::uint64_t{0});
    if (doc.contains("meta")) out.meta = doc["meta"];
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what(), 0);
  }
}

json samples_to_json(const SampleSet& samples, const json& meta) {
  json doc;
  doc["format"] = "samples-v1";
  doc["solver"] = samples.solver;
  doc["params"] = samples.params;
  doc["seed"] = samples.seed;
  doc["vartype"] = samples.vartype == Vartype::kSpin ? "spin" : "binary";
  json records = json::array();
  for (const auto& r : samples.records) {
    json state = json::array();
    for (auto s : r.state) state.push_back(static_cast<int>(s));
    records.push_back({{"state", std::move(state)}, {"energy", r.energy}, {"count", r.count}});
  }
  doc["records"] = std::move(records);
  if (!meta.empty()) doc["meta"] = meta;
  return doc;
}

SampleSet samples_from_json(const json& doc) {
  try {
    require_format(doc, "samples-v1");
    SampleSet out;
    out.solver = require(doc, "solver").get<std::string>();
    if (doc.contains("params")) {
      for (const auto& [key, value] : doc["params"].items()) {
        out.params[key] = value.is_string() ? value.get<std::string>() : value.dump();
      }
    }
    out.seed = doc.value("seed", std::uint64_t{0});
    const std::string vartype = doc.value("vartype", std::string("spin"));
    if (vartype == "spin") {
      out.vartype = Vartype::kSpin;
    } else if (vartype == "binary") {
      out.vartype = Vartype::kBinary;
    } else {
      throw ParseError("unknown vartype '" + vartype + "'", 0);
    }
    for (const auto& r : require(doc, "records")) {
      SampleRecord rec;
      for (const auto& s : require(r, "state")) rec.state.push_back(static_cast<std::int8_t>(s.get<int>()));
      rec.energy = require(r, "energy").get<double>();
      rec.count = r.value("count", std::int64_t{1});
      if (rec.count < 1) throw ParseError("record count must be >= 1", 0);
      out.records.push_back(std::move(rec));
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed sample set: ") + e.what(), 0);
  }
}

json qubo_to_json(const Qubo& qubo) {
  json doc;
  doc["format"] = "qubo-v1";
  doc["n"] = qubo.num_variables();
  json linear = json::object();
  for (int i = 0; i < qubo.num_variables(); ++i) linear[std::to_string(i)] = qubo.linear()[i];
  doc["linear"] = std::move(linear);
  json quadratic = json::array();
  for (const auto& [key, value] : qubo.quadratic()) quadratic.push_back({key.first, key.second, value});
  doc["quadratic"] = std::move(quadratic);
  doc["offset"] = qubo.offset();
  return doc;
}

Qubo qubo_from_json(const json& doc) {
  try {
    require_format(doc, "qubo-v1");
    Qubo qubo(require(doc, "n").get<int>());
    for (const auto& [key, value] : require(doc, "linear").items()) {
      qubo.set_linear(parse_index(key), value.get<double>());
    }
    for (const auto& entry : require(doc, "quadratic")) {
      const int i = entry.at(0).get<int>(), j = entry.at(1).get<int>();
      if (i == j) throw ParseError("quadratic entry on a diagonal", 0);
      qubo.add_quadratic(i, j, entry.at(2).get<double>());
    }
    qubo.set_offset(doc.value("offset", 0.0));
    return qubo;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed QUBO: ") + e.what(), 0);
  } catch (const ParameterError& e) {
    throw ParseError(std::string("malformed QUBO: ") + e.what(), 0);
  }
}

json distribution_to_json(const CoefficientDistribution& dist) {
  json doc;
  if (const auto* t = std::get_if<DiscreteTable>(&dist.law())) {
    doc["kind"] = "discrete_table";
    json params = json::array();
    for (const auto& [v, p] : t->entries) params.push_back({v, p});
    doc["params"] = std::move(params);
  } else if (const auto* u = std::get_if<UniformLaw>(&dist.law())) {
    doc["kind"] = "uniform";
    doc["params"] = {{"lo", u->lo}, {"hi", u->hi}};
  } else if (const auto* n = std::get_if<TruncatedNormalLaw>(&dist.law())) {
    doc["kind"] = "truncated_normal";
    doc["params"] = {{"mu", n->mu}, {"sigma", n->sigma}, {"lo", n->lo}, {"hi", n->hi}};
  }
  return doc;
}

CoefficientDistribution distribution_from_json(const json& doc) {
  try {
    const auto kind = require(doc, "kind").get<std::string>();
    const auto& params = require(doc, "params");
    if (kind == "discrete_table") {
      std::vector<std::pair<double, double>> entries;
      for (const auto& e : params) entries.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
      return CoefficientDistribution::discrete(std::move(entries));
    }
    if (kind == "uniform") {
      return CoefficientDistribution::uniform(params.at("lo").get<double>(),
                                              params.at("hi").get<double>());
    }
    if (kind == "truncated_normal") {
      return CoefficientDistribution::truncated_normal(
          params.at("mu").get<double>(), params.at("sigma").get<double>(),
          params.at("lo").get<double>(), params.at("hi").get<double>());
    }
    throw ParseError("unknown distribution kind '" + kind + "'", 0);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed distribution: ") + e.what(), 0);
  }
}

namespace {

std::vector<double> parse_numbers(std::string_view text, char sep) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(sep, pos), text.size());
    const std::string field(text.substr(pos, end - pos));
    std::size_t used = 0;
    double value;
    try {
      value = std::stod(field, &used);
    } catch (const std::exception&) {
      throw ParseError("invalid number '" + field + "'", 0);
    }
    if (used != field.size()) throw ParseError("invalid number '" + field + "'", 0);
    out.push_back(value);
    pos = end + 1;
    if (end == text.size()) break;
  }
  return out;
}

}  // namespace

CoefficientDistribution parse_distribution(std::string_view text) {
  if (!text.empty() && text.front() == '{') {
    try {
      return distribution_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw ParseError(std::string("malformed distribution JSON: ") + e.what(), 0);
    }
  }
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("distribution must look like KIND:PARAMS", 0);
  }
  const auto kind = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);
  if (kind == "uniform") {
    const auto v = parse_numbers(rest, ',');
    if (v.size() != 2) throw ParseError("uniform takes LO,HI", 0);
    return CoefficientDistribution::uniform(v[0], v[1]);
  }
  if (kind == "truncated_normal") {
    const auto v = parse_numbers(rest, ',');
    if (v.size() != 4) throw ParseError("truncated_normal takes MU,SIGMA,LO,HI", 0);
    return CoefficientDistribution::truncated_normal(v[0], v[1], v[2], v[3]);
  }
  if (kind == "discrete") {
    std::vector<std::pair<double, double>> entries;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const std::size_t end = std::min(rest.find(',', pos), rest.size());
      const auto item = rest.substr(pos, end - pos);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) throw ParseError("discrete entries look like V=P", 0);
      const auto value = parse_numbers(item.substr(0, eq), ',');
      const auto prob = parse_numbers(item.substr(eq + 1), ',');
      entries.emplace_back(value.at(0), prob.at(0));
      pos = end + 1;
      if (end == rest.size()) break;
    }
    return CoefficientDistribution::discrete(std::move(entries));
  }
  throw ParseError("unknown distribution kind '" + std::string(kind) + "'", 0);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error("short write to '" + path + "'");
}

}  // namespace isingbench
