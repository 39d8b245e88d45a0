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
#include <utility>
#include <vector>

#include "keygraph/models.hpp"

namespace keygraph {

// Inclusive K range first..last in steps of `step`.
struct RingSizeRange {
  std::size_t first = 1;
  std::size_t last = 1;
  std::size_t step = 1;

  std::vector<std::size_t> Values() const;
};

struct SweepConfig {
  std::size_t nodes = 2000;
  std::size_t pool_size = 10000;
  std::size_t level = 2;
  std::vector<double> channel_values{0.2, 0.5, 0.8};
  RingSizeRange ring_sizes{3, 21, 1};
  std::size_t trials = 1000;
  std::uint64_t master_seed = 42;
  double confidence = 0.95;

  // Throws std::invalid_argument on an empty grid, trials == 0, p outside
  // [0, 1], K > P, n < 3 or confidence outside (0, 1).
  void Validate() const;
};

struct TrialRecord {
  bool k_connected = false;
  std::size_t min_degree = 0;
  // Number of nodes of degree h, for h = 0..k.
  std::vector<std::size_t> low_degree_counts;

  bool operator==(const TrialRecord&) const = default;
};

// One sample of the intersection graph, its k-connectivity verdict and its
// low-degree histogram. Pure function of (params, seed).
TrialRecord RunTrial(const ModelParams& params, std::uint64_t seed);

struct CellResult {
  std::size_t ring_size = 0;
  double channel_on = 0.0;
  std::size_t trials = 0;
  std::size_t count_k_connected = 0;
  std::size_t count_min_degree_ge_k = 0;
  // min degree >= k but not k-connected
  std::size_t count_gap = 0;
  double empirical_prob = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double analytical_prob = 0.0;
  double alpha = 0.0;
  // Sum over trials of the number of degree-h nodes, h = 0..k.
  std::vector<std::size_t> degree_counts;
  // Trials in which no node had degree h, h = 0..k.
  std::vector<std::size_t> zero_degree_trials;

  bool operator==(const CellResult&) const = default;
};

// Seed of trial `trial` in the cell (K, p_index) of a sweep.
std::uint64_t TrialSeed(std::uint64_t master_seed, std::size_t ring_size,
                        std::size_t channel_index, std::size_t trial);

// Wilson score interval clamped to [0, 1].
std::pair<double, double> WilsonInterval(std::size_t successes, std::size_t trials,
                                         double confidence);

// Folds trial records into a cell and attaches the analytical prediction.
CellResult AggregateCell(const ModelParams& params, std::span<const TrialRecord> records,
                         double confidence);

// A single (K, p) cell. `jobs` == 0 uses every available thread.
CellResult RunCell(const ModelParams& params, std::size_t trials,
                   std::uint64_t master_seed, std::size_t channel_index,
                   double confidence = 0.95, int jobs = 0);
CellResult RunCellSerial(const ModelParams& params, std::size_t trials,
                         std::uint64_t master_seed, std::size_t channel_index,
                         double confidence = 0.95);

// Every (K, p) cell of the grid, sorted by (p, K). Trials of all cells are
// spread over `jobs` OpenMP threads; results do not depend on `jobs`. A
// failing trial aborts the sweep with std::runtime_error naming the cell.
std::vector<CellResult> RunSweep(const SweepConfig& config, int jobs = 0);

// Single-threaded reference for RunSweep.
std::vector<CellResult> RunSweepSerial(const SweepConfig& config);

struct DegreeCountFit {
  std::size_t degree = 0;
  double empirical_zero_freq = 0.0;  // fraction of trials with phi_h == 0
  double expected_zero_prob = 0.0;   // exp(-lambda_h)
  double abs_deviation = 0.0;
  double std_error = 0.0;  // binomial, from the expected probability
  bool within_3_sigma = false;
};

// Compares P[phi_h = 0] against the Poisson value exp(-lambda_h) for
// h = 0..k-1. A deviation passes if it is within three standard errors plus a
// half-count continuity allowance 1 / (2 trials).
std::vector<DegreeCountFit> DegreeCountGoodnessOfFit(const CellResult& cell,
                                                     std::span<const double> lambda,
                                                     std::size_t level);

}  // namespace keygraph
