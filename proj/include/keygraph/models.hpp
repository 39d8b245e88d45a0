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
#include <span>
#include <vector>

#include "keygraph/graph.hpp"
#include "keygraph/rng.hpp"

namespace keygraph {

using KeyId = std::uint32_t;

// One network scenario: n sensors, rings of K keys out of a pool of P, each
// link on with probability p, and the connectivity level k under study.
struct ModelParams {
  std::size_t nodes = 0;      // n
  std::size_t ring_size = 0;  // K
  std::size_t pool_size = 0;  // P
  double channel_on = 1.0;    // p
  std::size_t level = 1;      // k

  // Throws std::invalid_argument unless 1 <= K <= P, n >= 1, 0 <= p <= 1
  // and k >= 1.
  void Validate() const;
};

// Key rings S_1..S_n stored back to back. Keys are 1-based, each ring sorted.
class KeyAssignment {
 public:
  KeyAssignment(std::size_t nodes, std::size_t ring_size, std::size_t pool_size)
      : ring_size_(ring_size), pool_size_(pool_size), keys_(nodes * ring_size) {}

  std::size_t num_nodes() const {
    return ring_size_ == 0 ? 0 : keys_.size() / ring_size_;
  }
  std::size_t ring_size() const { return ring_size_; }
  std::size_t pool_size() const { return pool_size_; }

  std::span<const KeyId> ring(std::size_t node) const {
    return {keys_.data() + node * ring_size_, ring_size_};
  }
  std::span<KeyId> mutable_ring(std::size_t node) {
    return {keys_.data() + node * ring_size_, ring_size_};
  }

  bool operator==(const KeyAssignment&) const = default;

 private:
  std::size_t ring_size_;
  std::size_t pool_size_;
  std::vector<KeyId> keys_;
};

struct EdgeProbabilities {
  double key_share = 0.0;    // s
  double edge = 0.0;         // q = p * s
  double edge_approx = 0.0;  // p * K^2 / P, not clamped
};

// Probability that two independent uniform K-subsets of a P-pool intersect,
// 1 - C(P-K, K) / C(P, K). Evaluated as a sum of log1p terms so that the
// complement stays accurate when s is tiny. Throws on K == 0 or K > P.
double KeyShareProbability(std::size_t ring_size, std::size_t pool_size);

EdgeProbabilities ComputeEdgeProbabilities(const ModelParams& params);

// Uniform K-subset of {1..P} by Floyd's algorithm, sorted ascending.
void SampleKeyRing(std::size_t ring_size, std::size_t pool_size, Rng& rng,
                   std::span<KeyId> out);

KeyAssignment SampleKeyAssignment(const ModelParams& params, Rng& rng);

// Random key graph: i ~ j iff rings i and j intersect. Candidate pairs come
// from a key -> holders index, so the cost tracks sum over keys of
// holders(key)^2 rather than n^2.
Graph BuildKeyGraph(const KeyAssignment& assignment);

// G(n, p) with geometric skipping over the pair sequence.
Graph SampleErdosRenyiGraph(std::size_t nodes, double p, Rng& rng);

// G(n, K, P) intersected with G(n, p). Rings are drawn first, then every key
// graph edge is kept independently with probability p.
Graph SampleIntersectionGraph(const ModelParams& params, Rng& rng);

}  // namespace keygraph
