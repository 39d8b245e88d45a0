// Copyright 2026 The keygraph Authors
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
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace keygraph {

using NodeId = std::uint32_t;

// Undirected simple graph on nodes 0..n-1. Each node keeps a sorted,
// duplicate-free neighbor list; edges are always stored in both directions.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n) {}

  // Bulk construction from an unordered edge list. Duplicate pairs are
  // merged; self-loops and out-of-range labels throw std::invalid_argument.
  static Graph FromEdges(std::size_t n,
                         std::span<const std::pair<NodeId, NodeId>> edges);

  std::size_t num_nodes() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  // Idempotent. Throws std::invalid_argument on u == v or labels >= n.
  void AddEdge(NodeId u, NodeId v);
  bool HasEdge(NodeId u, NodeId v) const;

  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_[v]; }
  std::size_t degree(NodeId v) const { return adjacency_[v].size(); }

  // All edges (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<NodeId, NodeId>> Edges() const;

  // Debug dump: one "u v" line per edge with u < v, sorted.
  std::string EdgeListText() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t num_edges_ = 0;
};

Graph MakeCompleteGraph(std::size_t n);

struct DegreeSpectrum {
  // degree h -> number of nodes of degree exactly h
  std::map<std::size_t, std::size_t> counts;
  // 0 for the empty graph
  std::size_t min_degree = 0;
};

DegreeSpectrum ComputeDegreeSpectrum(const Graph& g);

std::size_t MinDegree(const Graph& g);

// Breadth-first reachability from node 0. Graphs with zero or one node are
// connected.
bool IsConnected(const Graph& g);

}  // namespace keygraph
