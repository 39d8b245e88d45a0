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

#include "keygraph/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include <fmt/format.h>

namespace keygraph {
namespace {

using Edge = std::pair<NodeId, NodeId>;

// Calls emit(a, b) once for every unordered pair a < b whose rings share at
// least one key. Order is deterministic: by a, then by a's keys, then by
// holder label.
template <typename Emit>
void ForEachKeySharingPair(const KeyAssignment& assignment, Emit&& emit) {
  const std::size_t n = assignment.num_nodes();
  const std::size_t pool = assignment.pool_size();

  // Counting sort into key -> holders (holders ascending).
  std::vector<std::uint32_t> offset(pool + 2, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (KeyId key : assignment.ring(v)) ++offset[key + 1];
  }
  for (std::size_t key = 1; key <= pool + 1; ++key) offset[key] += offset[key - 1];
  std::vector<NodeId> holders(offset[pool + 1]);
  std::vector<std::uint32_t> cursor(offset.begin(), offset.end() - 1);
  for (std::size_t v = 0; v < n; ++v) {
    for (KeyId key : assignment.ring(v)) holders[cursor[key]++] = static_cast<NodeId>(v);
  }

  // stamp[b] == a + 1 marks b as already paired with a.
  std::vector<std::uint32_t> stamp(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const auto mark = static_cast<std::uint32_t>(a + 1);
    for (KeyId key : assignment.ring(a)) {
      auto first = holders.begin() + offset[key];
      auto last = holders.begin() + offset[key + 1];
      for (auto it = std::upper_bound(first, last, static_cast<NodeId>(a)); it != last; ++it) {
        if (stamp[*it] != mark) {
          stamp[*it] = mark;
          emit(static_cast<NodeId>(a), *it);
        }
      }
    }
  }
}

}  // namespace

void ModelParams::Validate() const {
  if (nodes < 1) throw std::invalid_argument("n must be >= 1");
  if (ring_size < 1) throw std::invalid_argument("K must be >= 1");
  if (ring_size > pool_size) {
    throw std::invalid_argument(
        fmt::format("K = {} exceeds key pool size P = {}", ring_size, pool_size));
  }
  if (pool_size > std::numeric_limits<KeyId>::max() - 1) {
    throw std::invalid_argument("P exceeds key label range");
  }
  if (!(channel_on >= 0.0 && channel_on <= 1.0)) {
    throw std::invalid_argument(fmt::format("p = {} outside [0, 1]", channel_on));
  }
  if (level < 1) throw std::invalid_argument("k must be >= 1");
}

double KeyShareProbability(std::size_t ring_size, std::size_t pool_size) {
  if (ring_size == 0) throw std::invalid_argument("K must be >= 1");
  if (ring_size > pool_size) {
    throw std::invalid_argument(
        fmt::format("K = {} exceeds key pool size P = {}", ring_size, pool_size));
  }
  // Fewer than K keys left outside a ring: any two rings must meet.
  if (pool_size < 2 * ring_size) return 1.0;
  const double k = static_cast<double>(ring_size);
  double log_disjoint = 0.0;
  for (std::size_t i = 0; i < ring_size; ++i) {
    log_disjoint += std::log1p(-k / static_cast<double>(pool_size - i));
  }
  return -std::expm1(log_disjoint);
}

EdgeProbabilities ComputeEdgeProbabilities(const ModelParams& params) {
  params.Validate();
  EdgeProbabilities out;
  out.key_share = KeyShareProbability(params.ring_size, params.pool_size);
  out.edge = params.channel_on * out.key_share;
  const double k = static_cast<double>(params.ring_size);
  out.edge_approx = params.channel_on * k * k / static_cast<double>(params.pool_size);
  return out;
}

void SampleKeyRing(std::size_t ring_size, std::size_t pool_size, Rng& rng,
                   std::span<KeyId> out) {
  // Floyd: for j = P-K+1..P draw t in [1, j]; take t unless already chosen,
  // in which case take j (which cannot have been chosen yet).
  std::size_t filled = 0;
  for (std::size_t j = pool_size - ring_size + 1; j <= pool_size; ++j) {
    std::uniform_int_distribution<std::size_t> pick(1, j);
    auto t = static_cast<KeyId>(pick(rng));
    auto begin = out.begin();
    auto end = begin + static_cast<std::ptrdiff_t>(filled);
    auto pos = std::lower_bound(begin, end, t);
    if (pos != end && *pos == t) {
      t = static_cast<KeyId>(j);
      pos = end;  // j exceeds every earlier draw
    }
    std::move_backward(pos, end, end + 1);
    *pos = t;
    ++filled;
  }
}

KeyAssignment SampleKeyAssignment(const ModelParams& params, Rng& rng) {
  params.Validate();
  KeyAssignment assignment(params.nodes, params.ring_size, params.pool_size);
  for (std::size_t v = 0; v < params.nodes; ++v) {
    SampleKeyRing(params.ring_size, params.pool_size, rng, assignment.mutable_ring(v));
  }
  return assignment;
}

Graph BuildKeyGraph(const KeyAssignment& assignment) {
  std::vector<Edge> edges;
  ForEachKeySharingPair(assignment, [&](NodeId a, NodeId b) { edges.emplace_back(a, b); });
  return Graph::FromEdges(assignment.num_nodes(), edges);
}

Graph SampleErdosRenyiGraph(std::size_t nodes, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(fmt::format("p = {} outside [0, 1]", p));
  }
  if (p >= 1.0) return MakeCompleteGraph(nodes);
  std::vector<Edge> edges;
  if (p <= 0.0 || nodes < 2) return Graph::FromEdges(nodes, edges);

  // Walk the lower triangle (v > w) row by row, jumping Geometric(p) misses
  // between consecutive hits.
  std::geometric_distribution<std::uint64_t> skip(p);
  std::uint64_t v = 1;
  std::uint64_t w = 0;
  bool first = true;
  while (v < nodes) {
    w += skip(rng) + (first ? 0 : 1);
    first = false;
    while (w >= v && v < nodes) {
      w -= v;
      ++v;
    }
    if (v < nodes) edges.emplace_back(static_cast<NodeId>(w), static_cast<NodeId>(v));
  }
  return Graph::FromEdges(nodes, edges);
}

Graph SampleIntersectionGraph(const ModelParams& params, Rng& rng) {
  const KeyAssignment assignment = SampleKeyAssignment(params, rng);
  const double p = params.channel_on;
  std::vector<Edge> edges;
  if (p >= 1.0) {
    ForEachKeySharingPair(assignment, [&](NodeId a, NodeId b) { edges.emplace_back(a, b); });
  } else if (p > 0.0) {
    std::bernoulli_distribution channel(p);
    ForEachKeySharingPair(assignment, [&](NodeId a, NodeId b) {
      if (channel(rng)) edges.emplace_back(a, b);
    });
  }
  return Graph::FromEdges(params.nodes, edges);
}

}  // namespace keygraph
