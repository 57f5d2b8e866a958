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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace isingbench {

enum class TopologyFamily { kChimera, kPegasus, kZephyr, kCustom };

std::string_view to_string(TopologyFamily family);
TopologyFamily topology_family_from_string(std::string_view name);

using Edge = std::pair<int, int>;

// Undirected qubit-connectivity graph.
//
// Nodes are 0..num_nodes()-1. Edges are stored once as (u, v) with u < v and
// kept sorted, so two graphs built from the same parameters compare equal.
// Adjacency is precomputed in CSR form; every neighbor slot also records the
// index of its edge so per-edge data can be stored in a flat array.
class HardwareGraph {
 public:
  struct Neighbor {
    int node;
    int edge;
  };

  HardwareGraph() = default;
  // Throws ParameterError on self-loops, out-of-range endpoints or
  // duplicates. Edge endpoints may come in either order.
  HardwareGraph(TopologyFamily family, std::vector<std::int64_t> params,
                int num_nodes, std::vector<Edge> edges);

  TopologyFamily family() const { return family_; }
  const std::vector<std::int64_t>& params() const { return params_; }
  int num_nodes() const { return num_nodes_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Neighbor> neighbors(int node) const {
    return {adjacency_.data() + offsets_[node],
            adjacency_.data() + offsets_[node + 1]};
  }
  int degree(int node) const { return offsets_[node + 1] - offsets_[node]; }
  int max_degree() const;
  // Index of edge {u, v} in edges(), or -1.
  int find_edge(int u, int v) const;

  friend bool operator==(const HardwareGraph& a, const HardwareGraph& b) {
    return a.family_ == b.family_ && a.params_ == b.params_ &&
           a.num_nodes_ == b.num_nodes_ && a.edges_ == b.edges_;
  }

 private:
  TopologyFamily family_ = TopologyFamily::kCustom;
  std::vector<std::int64_t> params_;
  int num_nodes_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Neighbor> adjacency_;
};

using GraphPtr = std::shared_ptr<const HardwareGraph>;

// Chimera C(m, n, t): an m x n grid of K_{t,t} unit cells. Qubit (i, j, u, k)
// has id ((i*n + j)*2 + u)*t + k; u = 0 qubits couple to the cell below,
// u = 1 qubits to the cell on the right.
HardwareGraph build_chimera(int m, int n, int t);

// Pegasus P(m), fabric-only, with the standard shift offsets. Qubit
// (u, w, k, z) is linearized as ((u*m + w)*12 + k)*(m-1) + z and node ids are
// the ranks of these linear indices among fabric qubits.
HardwareGraph build_pegasus(int m);

// Linear coordinate index of every node of build_pegasus(m), in node order.
std::vector<std::int64_t> pegasus_linear_indices(int m);

// Zephyr Z(m, t). Qubit (u, w, k, j, z) has id
// (((u*(2m+1) + w)*t + k)*2 + j)*m + z, which is already contiguous.
HardwareGraph build_zephyr(int m, int t);

struct LoadedGraph {
  HardwareGraph graph;
  // original_ids[i] is the id node i carried in the text.
  std::vector<std::int64_t> original_ids;
  std::size_t duplicate_edges = 0;
};

// Parses an edge list: one "u v" pair per line, or a single id to declare an
// isolated node. Blank lines and lines starting with '#' are skipped. Node ids
// are relabeled to 0..N-1 in ascending order of the ids found in the text.
LoadedGraph load_graph(std::string_view text);

}  // namespace isingbench
