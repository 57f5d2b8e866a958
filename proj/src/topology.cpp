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

#include "isingbench/topology.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <map>
#include <set>

#include "isingbench/error.hpp"

namespace isingbench {

std::string_view to_string(TopologyFamily family) {
  switch (family) {
    case TopologyFamily::kChimera:
      return "chimera";
    case TopologyFamily::kPegasus:
      return "pegasus";
    case TopologyFamily::kZephyr:
      return "zephyr";
    case TopologyFamily::kCustom:
      return "custom";
  }
  return "custom";
}

TopologyFamily topology_family_from_string(std::string_view name) {
  if (name == "chimera") return TopologyFamily::kChimera;
  if (name == "pegasus") return TopologyFamily::kPegasus;
  if (name == "zephyr") return TopologyFamily::kZephyr;
  if (name == "custom") return TopologyFamily::kCustom;
  throw ParameterError("unknown topology family '" + std::string(name) + "'");
}

HardwareGraph::HardwareGraph(TopologyFamily family,
                             std::vector<std::int64_t> params, int num_nodes,
                             std::vector<Edge> edges)
    : family_(family), params_(std::move(params)), num_nodes_(num_nodes) {
  if (num_nodes < 0) throw ParameterError("negative node count");
  for (auto& [u, v] : edges) {
    if (u == v) {
      throw ParameterError("self-loop on node " + std::to_string(u));
    }
    if (u < 0 || v < 0 || u >= num_nodes || v >= num_nodes) {
      throw ParameterError("edge endpoint out of range");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw ParameterError("duplicate edge");
  }
  edges_ = std::move(edges);

  std::vector<int> degree(num_nodes_, 0);
  for (const auto& [u, v] : edges_) {
    ++degree[u];
    ++degree[v];
  }
  offsets_.assign(num_nodes_ + 1, 0);
  for (int i = 0; i < num_nodes_; ++i) offsets_[i + 1] = offsets_[i] + degree[i];
  adjacency_.resize(offsets_.back());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const auto [u, v] = edges_[e];
    adjacency_[fill[u]++] = {v, e};
    adjacency_[fill[v]++] = {u, e};
  }
  for (int i = 0; i < num_nodes_; ++i) {
    std::sort(adjacency_.begin() + offsets_[i], adjacency_.begin() + offsets_[i + 1],
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  }
}

int HardwareGraph::max_degree() const {
  int best = 0;
  for (int i = 0; i < num_nodes_; ++i) best = std::max(best, degree(i));
  return best;
}

int HardwareGraph::find_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= num_nodes_ || v >= num_nodes_) return -1;
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

namespace {

int checked_node_count(std::int64_t count) {
  if (count > std::numeric_limits<int>::max()) {
    throw ParameterError("topology size overflow: " + std::to_string(count) +
                         " nodes");
  }
  return static_cast<int>(count);
}

// Shift offsets of the production Pegasus fabric (vertical, horizontal).
constexpr std::array<int, 12> kPegasusVerticalOffsets = {2, 2, 2, 2, 10, 10,
                                                         10, 10, 6, 6, 6, 6};
constexpr std::array<int, 12> kPegasusHorizontalOffsets = {6, 6, 6, 6, 2, 2,
                                                           2, 2, 10, 10, 10, 10};

}  // namespace

HardwareGraph build_chimera(int m, int n, int t) {
  if (m < 1 || n < 1 || t < 1) {
    throw ParameterError("chimera parameters must be >= 1");
  }
  const int count = checked_node_count(std::int64_t{2} * t * m * n);
  auto id = [=](int i, int j, int u, int k) {
    return ((i * n + j) * 2 + u) * t + k;
  };
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m) * n * t * t +
                static_cast<std::size_t>(2) * m * n * t);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int a = 0; a < t; ++a) {
        for (int b = 0; b < t; ++b) edges.emplace_back(id(i, j, 0, a), id(i, j, 1, b));
        if (i + 1 < m) edges.emplace_back(id(i, j, 0, a), id(i + 1, j, 0, a));
        if (j + 1 < n) edges.emplace_back(id(i, j, 1, a), id(i, j + 1, 1, a));
      }
    }
  }
  return HardwareGraph(TopologyFamily::kChimera, {m, n, t}, count,
                       std::move(edges));
}

namespace {

struct PegasusLayout {
  int m;
  std::array<int, 2> fabric_start;
  std::array<int, 2> fabric_end;

  explicit PegasusLayout(int size) : m(size) {
    const auto [vmin, vmax] = std::minmax_element(
        kPegasusVerticalOffsets.begin(), kPegasusVerticalOffsets.end());
    const auto [hmin, hmax] = std::minmax_element(
        kPegasusHorizontalOffsets.begin(), kPegasusHorizontalOffsets.end());
    fabric_start = {*hmin, *vmin};
    fabric_end = {12 - *hmax, 12 - *vmax};
  }

  std::int64_t linear(int u, int w, int k, int z) const {
    return ((static_cast<std::int64_t>(u) * m + w) * 12 + k) * (m - 1) + z;
  }

  // Qubits on the boundary columns whose shifted segment would leave the
  // fabric are absent.
  bool in_fabric(int u, int w, int k) const {
    if (w == 0 && k < fabric_start[u]) return false;
    if (w == m - 1 && k >= 12 - fabric_end[u]) return false;
    return true;
  }
};

}  // namespace

std::vector<std::int64_t> pegasus_linear_indices(int m) {
  if (m < 2) throw ParameterError("pegasus size must be >= 2");
  const PegasusLayout layout(m);
  std::vector<std::int64_t> ids;
  for (int u = 0; u < 2; ++u)
    for (int w = 0; w < m; ++w)
      for (int k = 0; k < 12; ++k)
        for (int z = 0; z < m - 1; ++z)
          if (layout.in_fabric(u, w, k)) ids.push_back(layout.linear(u, w, k, z));
  return ids;  // generated in ascending linear order
}

HardwareGraph build_pegasus(int m) {
  if (m < 2) throw ParameterError("pegasus size must be >= 2");
  checked_node_count(std::int64_t{24} * m * (m - 1));
  const PegasusLayout layout(m);
  const auto ids = pegasus_linear_indices(m);
  auto node = [&](int u, int w, int k, int z) {
    const auto lin = layout.linear(u, w, k, z);
    return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), lin) -
                            ids.begin());
  };

  std::vector<Edge> edges;
  const int m1 = m - 1;
  for (int u = 0; u < 2; ++u) {
    for (int w = 0; w < m; ++w) {
      for (int k = 0; k < 12; ++k) {
        if (!layout.in_fabric(u, w, k)) continue;
        // External couplers along the qubit's own line.
        for (int z = 0; z + 1 < m1; ++z) {
          edges.emplace_back(node(u, w, k, z), node(u, w, k, z + 1));
        }
        // Odd couplers join the pair (2j, 2j+1).
        if (k % 2 == 0 && layout.in_fabric(u, w, k + 1)) {
          for (int z = 0; z < m1; ++z) {
            edges.emplace_back(node(u, w, k, z), node(u, w, k + 1, z));
          }
        }
      }
    }
  }
  // Internal couplers between vertical (0, w, k, z) and horizontal qubits.
  for (int w = 0; w < m; ++w) {
    for (int kk = 0; kk < 12; ++kk) {
      for (int k = 0; k < 12; ++k) {
        for (int z = 0; z < m1; ++z) {
          const int w2 = z + (kk < kPegasusVerticalOffsets[k] ? 1 : 0);
          const int z2 = w - (k < kPegasusHorizontalOffsets[kk] ? 1 : 0);
          if (z2 < 0 || z2 >= m1) continue;
          if (!layout.in_fabric(0, w, k) || !layout.in_fabric(1, w2, kk)) continue;
          edges.emplace_back(node(0, w, k, z), node(1, w2, kk, z2));
        }
      }
    }
  }
  return HardwareGraph(TopologyFamily::kPegasus, {m},
                       static_cast<int>(ids.size()), std::move(edges));
}

HardwareGraph build_zephyr(int m, int t) {
  if (m < 1 || t < 1) throw ParameterError("zephyr parameters must be >= 1");
  const int lines = 2 * m + 1;
  const int count = checked_node_count(std::int64_t{4} * t * m * lines);
  auto id = [=](int u, int w, int k, int j, int z) {
    return (((u * lines + w) * t + k) * 2 + j) * m + z;
  };
  std::vector<Edge> edges;
  for (int u = 0; u < 2; ++u) {
    for (int w = 0; w < lines; ++w) {
      for (int k = 0; k < t; ++k) {
        for (int j = 0; j < 2; ++j) {
          for (int z = 0; z + 1 < m; ++z) {
            edges.emplace_back(id(u, w, k, j, z), id(u, w, k, j, z + 1));
          }
        }
        for (int a = 0; a < 2; ++a) {
          for (int z = a; z < m; ++z) {
            edges.emplace_back(id(u, w, k, 0, z), id(u, w, k, 1, z - a));
          }
        }
      }
    }
  }
  for (int w = 0; w < m; ++w)
    for (int z = 0; z < m; ++z)
      for (int h = 0; h < t; ++h)
        for (int k = 0; k < t; ++k)
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
              for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                  edges.emplace_back(id(0, 2 * w + 1 + a * (2 * i - 1), k, j, z),
                                     id(1, 2 * z + 1 + b * (2 * j - 1), h, i, w));
  return HardwareGraph(TopologyFamily::kZephyr, {m, t}, count, std::move(edges));
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::int64_t parse_node_id(std::string_view field, std::size_t line) {
  std::int64_t value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 0) {
    throw ParseError("expected a non-negative integer, got '" +
                         std::string(field) + "'",
                     line);
  }
  return value;
}

}  // namespace

LoadedGraph load_graph(std::string_view text) {
  std::set<std::int64_t> ids;
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    if (fields.size() == 1) {
      ids.insert(parse_node_id(fields[0], line_no));
    } else if (fields.size() == 2) {
      const auto u = parse_node_id(fields[0], line_no);
      const auto v = parse_node_id(fields[1], line_no);
      if (u == v) throw ParseError("self-loop on node " + std::to_string(u), line_no);
      ids.insert(u);
      ids.insert(v);
      raw.emplace_back(std::min(u, v), std::max(u, v));
    } else {
      throw ParseError("expected one or two fields, got " +
                           std::to_string(fields.size()),
                       line_no);
    }
    if (eol == text.size()) break;
  }
  if (ids.size() > static_cast<std::size_t>(std::numeric_limits<int>::max())) {
    throw ParameterError("edge list has too many nodes");
  }

  LoadedGraph out;
  out.original_ids.assign(ids.begin(), ids.end());
  std::map<std::int64_t, int> relabel;
  for (std::size_t i = 0; i < out.original_ids.size(); ++i) {
    relabel.emplace(out.original_ids[i], static_cast<int>(i));
  }
  std::sort(raw.begin(), raw.end());
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (i > 0 && raw[i] == raw[i - 1]) {
      ++out.duplicate_edges;
      continue;
    }
    edges.emplace_back(relabel.at(raw[i].first), relabel.at(raw[i].second));
  }
  out.graph = HardwareGraph(TopologyFamily::kCustom, {},
                            static_cast<int>(out.original_ids.size()),
                            std::move(edges));
  return out;
}

}  // namespace isingbench
