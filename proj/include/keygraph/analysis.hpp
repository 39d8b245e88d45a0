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
#include <optional>
#include <string_view>
#include <vector>

#include "keygraph/models.hpp"

namespace keygraph {

// Cosmetic label only; |alpha| > 10 counts as deep in either tail.
enum class Regime { kSubcritical, kCritical, kSupercritical };

std::string_view ToString(Regime regime);

// alpha solves q = (ln n + (k-1) ln ln n + alpha) / n for the exact edge
// probability; beta solves the same equation for p K^2 / P.
struct ScalingDecomposition {
  double alpha = 0.0;
  double beta = 0.0;
  Regime regime = Regime::kCritical;
};

// Which edge probability feeds the asymptotic formula.
enum class EdgeModel { kExact, kApproximate };

struct AsymptoticPrediction {
  EdgeProbabilities probabilities;
  ScalingDecomposition scaling;
  EdgeModel model = EdgeModel::kExact;
  double prob_k_connected = 0.0;
  // Same limit as prob_k_connected: P[min degree >= k].
  double prob_min_degree_ge_k = 0.0;
  // lambda[h] for h = 0..k: expected number of nodes of degree h.
  std::vector<double> lambda;
};

// n q - ln n - (k-1) ln ln n. Throws for n < 3, k < 1 or q outside [0, 1].
double ScalingDeviation(std::size_t n, std::size_t k, double q);

// Inverse of ScalingDeviation.
double EdgeProbabilityForDeviation(std::size_t n, std::size_t k, double alpha);

ScalingDecomposition DecomposeScaling(std::size_t n, std::size_t k,
                                      const EdgeProbabilities& probabilities);

// exp(-exp(-alpha) / (k-1)!). Saturates to 0 or 1 for extreme alpha.
double AsymptoticKConnectivityProbability(double alpha, std::size_t k);

// The alpha at which the limit probability equals target:
// -ln(-(k-1)! ln target). Requires target in (0, 1).
double DeviationForProbability(double target, std::size_t k);

// lambda_h = n (nq)^h e^{-nq} / h! for h = 0..k, evaluated in log space.
std::vector<double> PoissonDegreeMeans(std::size_t n, std::size_t k, double q);

// Edge probabilities -> alpha (and beta) -> limit probability and Poisson
// means. Requires n >= 3.
AsymptoticPrediction Predict(const ModelParams& params,
                             EdgeModel model = EdgeModel::kExact);

struct KeyRingDesign {
  std::size_t ring_size = 0;
  double prob_at_ring_size = 0.0;
  // Prediction at ring_size - 1, absent when ring_size == 1.
  std::optional<double> prob_below;
};

// Smallest K in [1, P] whose prediction reaches target, or nullopt when even
// K = P falls short. The prediction is nondecreasing in K, so a binary search
// over K suffices.
std::optional<KeyRingDesign> DimensionKeyRing(std::size_t n, std::size_t pool_size,
                                              double channel_on, std::size_t k,
                                              double target,
                                              EdgeModel model = EdgeModel::kExact);

}  // namespace keygraph
