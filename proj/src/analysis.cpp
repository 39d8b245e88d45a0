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

#include "keygraph/analysis.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

namespace keygraph {
namespace {

constexpr double kRegimeBound = 10.0;
// exp overflows past this exponent
constexpr double kMaxExponent = 700.0;

void CheckScalingArgs(std::size_t n, std::size_t k) {
  if (n < 3) throw std::invalid_argument(fmt::format("n >= 3 required, got n = {}", n));
  if (k < 1) throw std::invalid_argument("k must be >= 1");
}

double LogTerm(std::size_t n, std::size_t k) {
  const double ln_n = std::log(static_cast<double>(n));
  return ln_n + static_cast<double>(k - 1) * std::log(ln_n);
}

Regime Classify(double alpha) {
  if (alpha < -kRegimeBound) return Regime::kSubcritical;
  if (alpha > kRegimeBound) return Regime::kSupercritical;
  return Regime::kCritical;
}

}  // namespace

std::string_view ToString(Regime regime) {
  switch (regime) {
    case Regime::kSubcritical: return "subcritical";
    case Regime::kCritical: return "critical";
    case Regime::kSupercritical: return "supercritical";
  }
  return "unknown";
}

double ScalingDeviation(std::size_t n, std::size_t k, double q) {
  CheckScalingArgs(n, k);
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument(fmt::format("q = {} outside [0, 1]", q));
  }
  return static_cast<double>(n) * q - LogTerm(n, k);
}

double EdgeProbabilityForDeviation(std::size_t n, std::size_t k, double alpha) {
  CheckScalingArgs(n, k);
  return (LogTerm(n, k) + alpha) / static_cast<double>(n);
}

ScalingDecomposition DecomposeScaling(std::size_t n, std::size_t k,
                                      const EdgeProbabilities& probabilities) {
  CheckScalingArgs(n, k);
  ScalingDecomposition out;
  out.alpha = ScalingDeviation(n, k, probabilities.edge);
  // p K^2 / P is not a probability and may exceed 1.
  out.beta = static_cast<double>(n) * probabilities.edge_approx - LogTerm(n, k);
  out.regime = Classify(out.alpha);
  return out;
}

double AsymptoticKConnectivityProbability(double alpha, std::size_t k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (std::isnan(alpha)) throw std::invalid_argument("alpha is NaN");
  // exp(-alpha) / (k-1)! = exp(-alpha - lgamma(k))
  const double exponent = -alpha - std::lgamma(static_cast<double>(k));
  if (exponent > kMaxExponent) return 0.0;
  return std::exp(-std::exp(exponent));
}

double DeviationForProbability(double target, std::size_t k) {
  if (!(target > 0.0 && target < 1.0)) {
    throw std::invalid_argument(fmt::format("target = {} outside (0, 1)", target));
  }
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  return -(std::lgamma(static_cast<double>(k)) + std::log(-std::log(target)));
}

std::vector<double> PoissonDegreeMeans(std::size_t n, std::size_t k, double q) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument(fmt::format("q = {} outside [0, 1]", q));
  }
  const double nq = static_cast<double>(n) * q;
  const double ln_n = std::log(static_cast<double>(n));
  std::vector<double> lambda(k + 1, 0.0);
  for (std::size_t h = 0; h <= k; ++h) {
    if (nq == 0.0) {
      lambda[h] = (h == 0) ? static_cast<double>(n) : 0.0;
      continue;
    }
    const double hd = static_cast<double>(h);
    const double log_lambda = ln_n + hd * std::log(nq) - nq - std::lgamma(hd + 1.0);
    lambda[h] = log_lambda > kMaxExponent ? std::numeric_limits<double>::infinity()
                                          : std::exp(log_lambda);
  }
  return lambda;
}

AsymptoticPrediction Predict(const ModelParams& params, EdgeModel model) {
  params.Validate();
  AsymptoticPrediction out;
  out.model = model;
  out.probabilities = ComputeEdgeProbabilities(params);
  out.scaling = DecomposeScaling(params.nodes, params.level, out.probabilities);
  const double deviation =
      model == EdgeModel::kExact ? out.scaling.alpha : out.scaling.beta;
  out.prob_k_connected = AsymptoticKConnectivityProbability(deviation, params.level);
  out.prob_min_degree_ge_k = out.prob_k_connected;
  const double q = model == EdgeModel::kExact
                       ? out.probabilities.edge
                       : std::min(out.probabilities.edge_approx, 1.0);
  out.lambda = PoissonDegreeMeans(params.nodes, params.level, q);
  return out;
}

std::optional<KeyRingDesign> DimensionKeyRing(std::size_t n, std::size_t pool_size,
                                              double channel_on, std::size_t k,
                                              double target, EdgeModel model) {
  if (!(target > 0.0 && target < 1.0)) {
    throw std::invalid_argument(fmt::format("target = {} outside (0, 1)", target));
  }
  auto prob_at = [&](std::size_t ring_size) {
    ModelParams params{n, ring_size, pool_size, channel_on, k};
    return Predict(params, model).prob_k_connected;
  };
  if (pool_size < 1) throw std::invalid_argument("P must be >= 1");
  if (prob_at(pool_size) < target) return std::nullopt;

  std::size_t lo = 1;  // invariant: answer in [lo, hi]
  std::size_t hi = pool_size;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (prob_at(mid) >= target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  KeyRingDesign design;
  design.ring_size = lo;
  design.prob_at_ring_size = prob_at(lo);
  if (lo > 1) design.prob_below = prob_at(lo - 1);
  return design;
}

}  // namespace keygraph
