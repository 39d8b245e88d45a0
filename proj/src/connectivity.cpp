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

#include "keygraph/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

namespace keygraph {
namespace {

// Vertex-split flow network: node v becomes in(v) = 2v and out(v) = 2v + 1
// joined by a unit arc; every undirected edge {u, v} becomes out(u) -> in(v)
// and out(v) -> in(u) with unbounded capacity. Paths from out(s) to in(t) are
// then internally vertex-disjoint.
class SplitFlowNetwork {
 public:
  explicit SplitFlowNetwork(const Graph& g) : nodes_(2 * g.num_nodes()) {
    const std::size_t n = g.num_nodes();
    const auto unbounded = static_cast<std::int32_t>(n + 1);
    first_.assign(nodes_ + 1, 0);
    for (NodeId v = 0; v < n; ++v) {
      first_[In(v) + 1] = static_cast<std::uint32_t>(g.degree(v) + 1);
      first_[Out(v) + 1] = static_cast<std::uint32_t>(g.degree(v) + 1);
    }
    for (std::size_t i = 1; i <= nodes_; ++i) first_[i] += first_[i - 1];
    head_.resize(first_[nodes_]);
    reverse_.resize(first_[nodes_]);
    capacity_.resize(first_[nodes_]);
    std::vector<std::uint32_t> fill(first_.begin(), first_.end() - 1);

    auto add_arc = [&](std::uint32_t from, std::uint32_t to, std::int32_t cap) {
      const std::uint32_t fwd = fill[from]++;
      const std::uint32_t bwd = fill[to]++;
      head_[fwd] = to;
      capacity_[fwd] = cap;
      reverse_[fwd] = bwd;
      head_[bwd] = from;
      capacity_[bwd] = 0;
      reverse_[bwd] = fwd;
    };
    for (NodeId v = 0; v < n; ++v) {
      add_arc(In(v), Out(v), 1);
      for (NodeId w : g.neighbors(v)) add_arc(Out(v), In(w), unbounded);
    }
    initial_capacity_ = capacity_;
    level_.resize(nodes_);
    current_.resize(nodes_);
    queue_.reserve(nodes_);
  }

  // Number of internally disjoint s-t paths, stopping once `limit` is reached.
  std::size_t DisjointPaths(NodeId s, NodeId t, std::size_t limit) {
    capacity_ = initial_capacity_;
    const std::uint32_t source = Out(s);
    const std::uint32_t sink = In(t);
    std::size_t flow = 0;
    while (flow < limit && BuildLevels(source, sink)) {
      for (std::size_t v = 0; v < nodes_; ++v) current_[v] = first_[v];
      while (flow < limit && Augment(source, sink)) ++flow;
    }
    return flow;
  }

 private:
  static std::uint32_t In(NodeId v) { return 2 * v; }
  static std::uint32_t Out(NodeId v) { return 2 * v + 1; }

  bool BuildLevels(std::uint32_t source, std::uint32_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    queue_.clear();
    queue_.push_back(source);
    level_[source] = 0;
    for (std::size_t qh = 0; qh < queue_.size(); ++qh) {
      const std::uint32_t v = queue_[qh];
      if (v == sink) break;
      for (std::uint32_t a = first_[v]; a < first_[v + 1]; ++a) {
        const std::uint32_t w = head_[a];
        if (capacity_[a] > 0 && level_[w] < 0) {
          level_[w] = level_[v] + 1;
          queue_.push_back(w);
        }
      }
    }
    return level_[sink] >= 0;
  }

  // One unit along the level graph. Every augmenting path crosses a unit arc,
  // so each push carries exactly one unit.
  bool Augment(std::uint32_t source, std::uint32_t sink) {
    path_.clear();
    std::uint32_t v = source;
    while (v != sink) {
      std::uint32_t& a = current_[v];
      while (a < first_[v + 1] &&
             !(capacity_[a] > 0 && level_[head_[a]] == level_[v] + 1)) {
        ++a;
      }
      if (a == first_[v + 1]) {
        level_[v] = -1;  // dead end
        if (path_.empty()) return false;
        v = head_[reverse_[path_.back()]];
        path_.pop_back();
        ++current_[v];
        continue;
      }
      path_.push_back(a);
      v = head_[a];
    }
    for (std::uint32_t a : path_) {
      --capacity_[a];
      ++capacity_[reverse_[a]];
    }
    return true;
  }

  std::size_t nodes_;
  std::vector<std::uint32_t> first_;
  std::vector<std::uint32_t> head_;
  std::vector<std::uint32_t> reverse_;
  std::vector<std::int32_t> capacity_;
  std::vector<std::int32_t> initial_capacity_;
  std::vector<std::int32_t> level_;
  std::vector<std::uint32_t> current_;
  std::vector<std::uint32_t> queue_;
  std::vector<std::uint32_t> path_;
};

bool IsComplete(const Graph& g) {
  const std::size_t n = g.num_nodes();
  return g.num_edges() == n * (n - 1) / 2;
}

bool FlowKConnected(const Graph& g, std::size_t k) {
  const std::size_t n = g.num_nodes();
  SplitFlowNetwork network(g);
  for (NodeId s = 0; s < k; ++s) {
    auto nbrs = g.neighbors(s);
    auto next_nbr = nbrs.begin();
    for (NodeId t = 0; t < n; ++t) {
      while (next_nbr != nbrs.end() && *next_nbr < t) ++next_nbr;
      if (t == s || (next_nbr != nbrs.end() && *next_nbr == t)) continue;
      if (t < s) continue;  // pair already tested with t as the source
      if (network.DisjointPaths(s, t, k) < k) return false;
    }
  }
  return true;
}

}  // namespace

std::string_view ToString(DecisionPath path) {
  switch (path) {
    case DecisionPath::kMinDegree: return "min-degree";
    case DecisionPath::kCompleteGraph: return "complete-graph";
    case DecisionPath::kTraversal: return "traversal";
    case DecisionPath::kArticulationPoints: return "articulation-points";
    case DecisionPath::kFlow: return "flow";
  }
  return "unknown";
}

ConnectivityVerdict IsKConnected(const Graph& g, std::size_t k,
                                 const ConnectivityOptions& options) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  ConnectivityVerdict verdict;
  verdict.level = k;
  verdict.min_degree = MinDegree(g);
  // n <= k implies min degree <= n - 1 < k, so tiny graphs stop here too.
  if (g.num_nodes() == 0 || verdict.min_degree < k) {
    verdict.path = DecisionPath::kMinDegree;
    verdict.is_k_connected = false;
  } else if (IsComplete(g)) {
    verdict.path = DecisionPath::kCompleteGraph;
    verdict.is_k_connected = true;
  } else if (k == 1) {
    verdict.path = DecisionPath::kTraversal;
    verdict.is_k_connected = IsConnected(g);
  } else if (k == 2 && options.articulation_shortcut) {
    verdict.path = DecisionPath::kArticulationPoints;
    verdict.is_k_connected = IsBiconnected(g);
  } else {
    verdict.path = DecisionPath::kFlow;
    verdict.is_k_connected = FlowKConnected(g, k);
  }
  return verdict;
}

bool IsBiconnected(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n < 3) return false;
  constexpr std::uint32_t kUnseen = 0;
  std::vector<std::uint32_t> order(n, kUnseen);  // 1-based discovery time
  std::vector<std::uint32_t> low(n, 0);
  std::vector<NodeId> parent(n, 0);
  std::vector<std::uint32_t> next_edge(n, 0);
  std::vector<NodeId> stack;
  stack.reserve(n);

  std::uint32_t clock = 0;
  std::size_t root_children = 0;
  order[0] = low[0] = ++clock;
  stack.push_back(0);
  while (!stack.empty()) {
    const NodeId v = stack.back();
    auto nbrs = g.neighbors(v);
    if (next_edge[v] < nbrs.size()) {
      const NodeId w = nbrs[next_edge[v]++];
      if (order[w] == kUnseen) {
        parent[w] = v;
        order[w] = low[w] = ++clock;
        if (v == 0) ++root_children;
        stack.push_back(w);
      } else if (!(v != 0 && w == parent[v])) {
        low[v] = std::min(low[v], order[w]);
      }
      continue;
    }
    stack.pop_back();
    if (v == 0) break;
    const NodeId u = parent[v];
    low[u] = std::min(low[u], low[v]);
    if (u != 0 && low[v] >= order[u]) return false;  // u separates v's subtree
  }
  if (clock != n) return false;
  return root_children == 1;
}

std::size_t MinVertexCutBetween(const Graph& g, NodeId s, NodeId t) {
  const std::size_t n = g.num_nodes();
  if (s >= n || t >= n) {
    throw std::invalid_argument(fmt::format("nodes ({}, {}) out of range", s, t));
  }
  if (s == t) throw std::invalid_argument("source and sink coincide");
  if (g.HasEdge(s, t)) {
    throw std::invalid_argument(
        fmt::format("nodes {} and {} are adjacent; no vertex cut exists", s, t));
  }
  SplitFlowNetwork network(g);
  return network.DisjointPaths(s, t, n);
}

bool BruteForceKConnected(const Graph& g, std::size_t k, std::size_t node_limit) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const std::size_t n = g.num_nodes();
  if (n > node_limit || n > 32) {
    throw std::invalid_argument(
        fmt::format("brute force limited to {} nodes, got {}", node_limit, n));
  }
  if (n <= k) return false;

  std::vector<std::uint32_t> adj(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId w : g.neighbors(v)) adj[v] |= 1u << w;
  }
  const std::uint64_t all = (n == 32) ? 0xffffffffULL : ((1ULL << n) - 1);

  auto remainder_connected = [&](std::uint32_t alive) {
    std::uint32_t reached = alive & (~alive + 1);  // lowest alive vertex
    std::uint32_t frontier = reached;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const std::uint32_t fresh = adj[v] & alive & ~reached;
      reached |= fresh;
      frontier |= fresh;
    }
    return reached == alive;
  };

  for (std::uint64_t removed = 0; removed <= all; ++removed) {
    if (static_cast<std::size_t>(std::popcount(removed)) > k - 1) continue;
    const auto alive = static_cast<std::uint32_t>(all & ~removed);
    if (!remainder_connected(alive)) return false;
  }
  return true;
}

}  // namespace keygraph
