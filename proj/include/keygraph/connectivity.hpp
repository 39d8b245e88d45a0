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
#include <string_view>

#include "keygraph/graph.hpp"

namespace keygraph {

// Which branch of IsKConnected produced the answer.
enum class DecisionPath {
  kMinDegree,         // min degree < k, so kappa < k
  kCompleteGraph,     // K_n with n > k
  kTraversal,         // k == 1: breadth-first search
  kArticulationPoints,  // k == 2: depth-first lowpoint search
  kFlow,              // Menger check with unit-capacity max-flow
};

std::string_view ToString(DecisionPath path);

struct ConnectivityVerdict {
  std::size_t level = 1;
  bool is_k_connected = false;
  std::size_t min_degree = 0;
  DecisionPath path = DecisionPath::kMinDegree;
};

struct ConnectivityOptions {
  // Route k == 2 through the linear-time articulation point search instead of
  // max-flow. Disable to force the flow path (used by the oracle tests).
  bool articulation_shortcut = true;
};

// True iff n > k and the vertex connectivity of g is at least k. Complete
// graphs have kappa(K_n) = n - 1. Throws std::invalid_argument on k < 1.
//
// For k >= 3 (or k == 2 without the shortcut) every vertex s in {0..k-1} is
// tested against every non-neighbour t with a max-flow capped at k. Any
// separator X with |X| < k misses some such s, and a vertex t on the far side
// of X witnesses kappa(s, t) < k, so the pair set is complete.
ConnectivityVerdict IsKConnected(const Graph& g, std::size_t k,
                                 const ConnectivityOptions& options = {});

// True iff g has no articulation point and is connected (n >= 3).
bool IsBiconnected(const Graph& g);

// Smallest number of vertices whose removal separates s from t, equal to the
// maximum number of internally vertex-disjoint s-t paths. Requires s != t and
// s, t non-adjacent; throws std::invalid_argument otherwise.
std::size_t MinVertexCutBetween(const Graph& g, NodeId s, NodeId t);

inline constexpr std::size_t kBruteForceNodeLimit = 24;

// Literal definition: n > k and g - S is connected for every vertex set S
// with |S| <= k - 1. Exponential; throws when n exceeds node_limit.
bool BruteForceKConnected(const Graph& g, std::size_t k,
                          std::size_t node_limit = kBruteForceNodeLimit);

}  // namespace keygraph
