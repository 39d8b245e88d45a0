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

#include "keygraph/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

namespace keygraph {
namespace {

void CheckEndpoints(std::size_t n, NodeId u, NodeId v) {
  if (u == v) {
    throw std::invalid_argument(fmt::format("self-loop at node {}", u));
  }
  if (u >= n || v >= n) {
    throw std::invalid_argument(
        fmt::format("edge ({}, {}) out of range for {} nodes", u, v, n));
  }
}

}  // namespace

Graph Graph::FromEdges(std::size_t n,
                       std::span<const std::pair<NodeId, NodeId>> edges) {
  if (n > std::numeric_limits<NodeId>::max()) {
    throw std::invalid_argument("node count exceeds label range");
  }
  Graph g(n);
  std::vector<std::size_t> degree(n, 0);
  for (auto [u, v] : edges) {
    CheckEndpoints(n, u, v);
    ++degree[u];
    ++degree[v];
  }
  for (std::size_t v = 0; v < n; ++v) g.adjacency_[v].reserve(degree[v]);
  for (auto [u, v] : edges) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::size_t endpoints = 0;
  for (auto& row : g.adjacency_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    endpoints += row.size();
  }
  g.num_edges_ = endpoints / 2;
  return g;
}

void Graph::AddEdge(NodeId u, NodeId v) {
  CheckEndpoints(num_nodes(), u, v);
  auto& row_u = adjacency_[u];
  auto it = std::lower_bound(row_u.begin(), row_u.end(), v);
  if (it != row_u.end() && *it == v) return;
  row_u.insert(it, v);
  auto& row_v = adjacency_[v];
  row_v.insert(std::lower_bound(row_v.begin(), row_v.end(), u), u);
  ++num_edges_;
}

bool Graph::HasEdge(NodeId u, NodeId v) const {
  if (u >= num_nodes() || v >= num_nodes()) return false;
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> Graph::Edges() const {
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(num_edges_);
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

std::string Graph::EdgeListText() const {
  std::string out;
  for (auto [u, v] : Edges()) out += fmt::format("{} {}\n", u, v);
  return out;
}

Graph MakeCompleteGraph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::FromEdges(n, edges);
}

DegreeSpectrum ComputeDegreeSpectrum(const Graph& g) {
  DegreeSpectrum spectrum;
  for (NodeId v = 0; v < g.num_nodes(); ++v) ++spectrum.counts[g.degree(v)];
  if (!spectrum.counts.empty()) {
    spectrum.min_degree = spectrum.counts.begin()->first;
  }
  return spectrum;
}

std::size_t MinDegree(const Graph& g) {
  if (g.num_nodes() == 0) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (NodeId v = 0; v < g.num_nodes(); ++v) best = std::min(best, g.degree(v));
  return best;
}

bool IsConnected(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<NodeId> queue;
  queue.reserve(n);
  queue.push_back(0);
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (NodeId w : g.neighbors(queue[head])) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return queue.size() == n;
}

}  // namespace keygraph
