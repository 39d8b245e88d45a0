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

#include <numeric>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "keygraph/graph.hpp"
#include "keygraph/models.hpp"

using namespace keygraph;

namespace {

// Random graph with independent edges; test-only, does not go through the
// library samplers.
Graph RandomGraph(std::size_t n, double p, std::mt19937& gen) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(gen)) g.AddEdge(u, v);
    }
  }
  return g;
}

std::size_t UnionFindComponents(const Graph& g) {
  std::vector<std::size_t> parent(g.num_nodes());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = g.num_nodes();
  for (auto [u, v] : g.Edges()) {
    auto a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

void CheckInvariants(const Graph& g) {
  std::size_t endpoints = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    auto nbrs = g.neighbors(v);
    endpoints += nbrs.size();
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      REQUIRE(nbrs[i] < g.num_nodes());
      REQUIRE(nbrs[i] != v);
      if (i > 0) REQUIRE(nbrs[i - 1] < nbrs[i]);
      REQUIRE(g.HasEdge(nbrs[i], v));
    }
  }
  REQUIRE(endpoints == 2 * g.num_edges());
}

}  // namespace

TEST_CASE("new graphs have no edges") {
  Graph empty(0);
  CHECK(empty.num_nodes() == 0);
  CHECK(empty.num_edges() == 0);

  Graph three(3);
  CHECK(three.num_nodes() == 3);
  CHECK(ComputeDegreeSpectrum(three).min_degree == 0);

  Graph five(5);
  five.AddEdge(0, 1);
  five.AddEdge(1, 2);
  std::vector<std::size_t> degrees;
  for (NodeId v = 0; v < 5; ++v) degrees.push_back(five.degree(v));
  CHECK(degrees == std::vector<std::size_t>{1, 2, 1, 0, 0});
}

TEST_CASE("AddEdge is symmetric and idempotent") {
  Graph g(3);
  g.AddEdge(0, 1);
  g.AddEdge(0, 1);
  g.AddEdge(1, 0);
  CHECK(g.degree(0) == 1);
  CHECK(g.num_edges() == 1);
  CHECK(g.neighbors(1)[0] == 0);

  Graph h(3);
  h.AddEdge(2, 0);
  CHECK(h.Edges() == std::vector<std::pair<NodeId, NodeId>>{{0, 2}});
  CHECK_FALSE(h.HasEdge(0, 1));
}

TEST_CASE("AddEdge rejects self-loops and bad labels") {
  Graph g(3);
  CHECK_THROWS_AS(g.AddEdge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.AddEdge(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(g.AddEdge(7, 1), std::invalid_argument);
  const std::pair<NodeId, NodeId> loop[] = {{2, 2}};
  CHECK_THROWS_AS(Graph::FromEdges(3, loop), std::invalid_argument);
}

TEST_CASE("FromEdges merges duplicates") {
  const std::pair<NodeId, NodeId> edges[] = {{3, 1}, {1, 3}, {0, 1}, {1, 0}, {2, 3}};
  Graph g = Graph::FromEdges(4, edges);
  CHECK(g.num_edges() == 3);
  CHECK(g.EdgeListText() == "0 1\n1 3\n2 3\n");
  CheckInvariants(g);
}

TEST_CASE("degree spectrum examples") {
  auto k4 = ComputeDegreeSpectrum(MakeCompleteGraph(4));
  CHECK(k4.counts == std::map<std::size_t, std::size_t>{{3, 4}});
  CHECK(k4.min_degree == 3);

  Graph path(3);
  path.AddEdge(0, 1);
  path.AddEdge(1, 2);
  auto ps = ComputeDegreeSpectrum(path);
  CHECK(ps.counts == std::map<std::size_t, std::size_t>{{1, 2}, {2, 1}});
  CHECK(ps.min_degree == 1);

  auto isolated = ComputeDegreeSpectrum(Graph(10));
  CHECK(isolated.counts == std::map<std::size_t, std::size_t>{{0, 10}});
  CHECK(isolated.min_degree == 0);
}

TEST_CASE("IsConnected examples") {
  Graph path(3);
  path.AddEdge(0, 1);
  path.AddEdge(1, 2);
  CHECK(IsConnected(path));

  Graph two_edges(4);
  two_edges.AddEdge(0, 1);
  two_edges.AddEdge(2, 3);
  CHECK_FALSE(IsConnected(two_edges));

  CHECK(IsConnected(Graph(1)));
  CHECK(IsConnected(Graph(0)));
  CHECK_FALSE(IsConnected(Graph(2)));
}

TEST_CASE("sampler outputs satisfy the graph invariants") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    CheckInvariants(SampleErdosRenyiGraph(40, 0.2, rng));
    CheckInvariants(SampleIntersectionGraph({40, 3, 30, 0.7, 2}, rng));
    CheckInvariants(BuildKeyGraph(SampleKeyAssignment({40, 2, 25, 1.0, 1}, rng)));
  }
}

TEST_CASE("handshake lemma on random graphs") {
  std::mt19937 gen(7);
  for (int i = 0; i < 100; ++i) {
    const Graph g = RandomGraph(1 + i % 30, 0.05 * (i % 20), gen);
    std::size_t weighted = 0;
    for (auto [h, count] : ComputeDegreeSpectrum(g).counts) weighted += h * count;
    CHECK(weighted == 2 * g.num_edges());
    std::size_t total = 0;
    for (auto [h, count] : ComputeDegreeSpectrum(g).counts) total += count;
    CHECK(total == g.num_nodes());
  }
}

TEST_CASE("IsConnected agrees with union-find") {
  std::mt19937 gen(11);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + i % 15;
    const Graph g = RandomGraph(n, 0.05 + 0.3 * ((i * 7) % 10) / 10.0, gen);
    CHECK(IsConnected(g) == (UnionFindComponents(g) == 1));
  }
}
