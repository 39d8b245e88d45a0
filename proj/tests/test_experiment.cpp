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

#include <cmath>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "keygraph/analysis.hpp"
#include "keygraph/experiment.hpp"

using namespace keygraph;

namespace {

// Wilson bounds written out with the 95% normal quantile.
std::pair<double, double> WilsonReference(double x, double n) {
  const double z = 1.959963984540054;
  const double phat = x / n;
  const double denom = 1.0 + z * z / n;
  const double center = (phat + z * z / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n)) / denom;
  return {center - half, center + half};
}

SweepConfig SmallSweep() {
  SweepConfig config;
  config.nodes = 120;
  config.pool_size = 600;
  config.level = 2;
  config.channel_values = {0.5, 0.9};
  config.ring_sizes = {4, 12, 4};
  config.trials = 40;
  config.master_seed = 7;
  return config;
}

}  // namespace

TEST_CASE("trial records") {
  const auto off = RunTrial({50, 3, 100, 0.0, 1}, 1);
  CHECK_FALSE(off.k_connected);
  CHECK(off.min_degree == 0);
  CHECK(off.low_degree_counts == std::vector<std::size_t>{50, 0});

  for (std::uint64_t seed : {1, 2, 3}) {
    const auto full = RunTrial({10, 5, 5, 1.0, 3}, seed);
    CHECK(full.k_connected);
    CHECK(full.min_degree == 9);
  }

  const ModelParams params{300, 6, 1000, 0.7, 2};
  CHECK(RunTrial(params, 77) == RunTrial(params, 77));
}

TEST_CASE("trial seeds separate every coordinate") {
  std::set<std::uint64_t> seen;
  for (std::size_t k = 0; k < 5; ++k) {
    for (std::size_t pi = 0; pi < 5; ++pi) {
      for (std::size_t t = 0; t < 20; ++t) seen.insert(TrialSeed(42, k, pi, t));
    }
  }
  CHECK(seen.size() == 500);
  CHECK(TrialSeed(1, 2, 3, 4) != TrialSeed(2, 2, 3, 4));
  CHECK(TrialSeed(1, 2, 3, 4) == TrialSeed(1, 2, 3, 4));
}

TEST_CASE("Wilson interval") {
  auto [lo0, hi0] = WilsonInterval(0, 10, 0.95);
  CHECK(lo0 == 0.0);
  CHECK(hi0 == doctest::Approx(WilsonReference(0, 10).second));

  auto [lo, hi] = WilsonInterval(500, 1000, 0.95);
  CHECK(lo == doctest::Approx(0.469).epsilon(1e-3));
  CHECK(hi == doctest::Approx(0.531).epsilon(1e-3));
  CHECK(lo == doctest::Approx(WilsonReference(500, 1000).first).epsilon(1e-12));
  CHECK(hi == doctest::Approx(WilsonReference(500, 1000).second).epsilon(1e-12));

  auto [lo1, hi1] = WilsonInterval(1000, 1000, 0.95);
  CHECK(hi1 == 1.0);
  CHECK(lo1 == doctest::Approx(WilsonReference(1000, 1000).first));

  for (std::size_t n : {1, 7, 100}) {
    for (std::size_t x = 0; x <= n; ++x) {
      auto [l, h] = WilsonInterval(x, n, 0.9);
      const double phat = static_cast<double>(x) / static_cast<double>(n);
      CHECK(l <= phat);
      CHECK(phat <= h);
      CHECK(l >= 0.0);
      CHECK(h <= 1.0);
    }
  }
  CHECK(WilsonInterval(30, 100, 0.99).second > WilsonInterval(30, 100, 0.9).second);
  CHECK_THROWS_AS(WilsonInterval(3, 2, 0.95), std::invalid_argument);
  CHECK_THROWS_AS(WilsonInterval(0, 0, 0.95), std::invalid_argument);
}

TEST_CASE("degenerate sweep cell") {
  SweepConfig config;
  config.nodes = 50;
  config.pool_size = 100;
  config.level = 1;
  config.channel_values = {0.0};
  config.ring_sizes = {5, 5, 1};
  config.trials = 1;
  const auto cells = RunSweep(config);
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].empirical_prob == 0.0);
  CHECK(cells[0].count_k_connected == 0);
  CHECK(cells[0].ring_size == 5);
}

TEST_CASE("sweep config validation") {
  SweepConfig config = SmallSweep();
  config.trials = 0;
  CHECK_THROWS_AS(RunSweep(config), std::invalid_argument);
  config = SmallSweep();
  config.channel_values = {0.5, 1.2};
  CHECK_THROWS_AS(RunSweep(config), std::invalid_argument);
  config = SmallSweep();
  config.ring_sizes = {9, 3, 1};
  CHECK_THROWS_AS(RunSweep(config), std::invalid_argument);
  config = SmallSweep();
  config.ring_sizes = {3, 700, 1};
  CHECK_THROWS_AS(RunSweep(config), std::invalid_argument);
  config = SmallSweep();
  config.nodes = 2;
  CHECK_THROWS_AS(RunSweepSerial(config), std::invalid_argument);
  config = SmallSweep();
  config.channel_values.clear();
  CHECK_THROWS_AS(RunSweep(config), std::invalid_argument);
}

TEST_CASE("parallel sweep matches the serial reference") {
  const SweepConfig config = SmallSweep();
  const auto serial = RunSweepSerial(config);
  REQUIRE(serial.size() == 6);
  for (int jobs : {1, 2, 4, 8}) {
    CAPTURE(jobs);
    CHECK(RunSweep(config, jobs) == serial);
  }
  const ModelParams params{120, 8, 600, 0.5, 2};
  CHECK(RunCell(params, 40, 7, 0, 0.95, 3) == RunCellSerial(params, 40, 7, 0));
  // The cell of a sweep is the cell run on its own with the same index.
  CHECK(RunCellSerial(params, 40, 7, 0) == serial[1]);
}

TEST_CASE("sweep cells are ordered and consistent") {
  SweepConfig config = SmallSweep();
  config.channel_values = {0.9, 0.5};
  const auto cells = RunSweep(config);
  REQUIRE(cells.size() == 6);
  for (std::size_t i = 1; i < cells.size(); ++i) {
    const bool ordered = cells[i - 1].channel_on < cells[i].channel_on ||
                         (cells[i - 1].channel_on == cells[i].channel_on &&
                          cells[i - 1].ring_size < cells[i].ring_size);
    CHECK(ordered);
  }
  for (const auto& cell : cells) {
    CHECK(cell.count_k_connected <= cell.count_min_degree_ge_k);
    CHECK(cell.count_gap == cell.count_min_degree_ge_k - cell.count_k_connected);
    CHECK(cell.empirical_prob ==
          static_cast<double>(cell.count_k_connected) / static_cast<double>(cell.trials));
    CHECK(cell.ci_low <= cell.empirical_prob);
    CHECK(cell.empirical_prob <= cell.ci_high);
    const auto pred = Predict({config.nodes, cell.ring_size, config.pool_size, cell.channel_on, 2});
    CHECK(cell.analytical_prob == pred.prob_k_connected);
    CHECK(cell.alpha == pred.scaling.alpha);
    CHECK(cell.degree_counts.size() == 3);
    CHECK(cell.zero_degree_trials.size() == 3);
    // A trial with min degree >= k has no nodes of degree 0 or 1.
    CHECK(cell.zero_degree_trials[0] >= cell.count_min_degree_ge_k);
  }
}

TEST_CASE("empirical probability rises with K and p up to noise") {
  SweepConfig config;
  config.nodes = 300;
  config.pool_size = 3000;
  config.level = 2;
  config.channel_values = {0.3, 0.6, 1.0};
  config.ring_sizes = {4, 20, 2};
  config.trials = 80;
  const auto cells = RunSweep(config);
  auto se = [&](double a) { return std::sqrt(std::max(a * (1 - a), 0.01) / config.trials); };
  const std::size_t per_p = config.ring_sizes.Values().size();
  for (std::size_t pi = 0; pi < 3; ++pi) {
    double running_max = 0.0;
    for (std::size_t i = 0; i < per_p; ++i) {
      const double e = cells[pi * per_p + i].empirical_prob;
      CHECK(e >= running_max - 3.0 * se(running_max));
      running_max = std::max(running_max, e);
    }
  }
  for (std::size_t i = 0; i < per_p; ++i) {
    for (std::size_t pi = 1; pi < 3; ++pi) {
      const double lower = cells[(pi - 1) * per_p + i].empirical_prob;
      const double upper = cells[pi * per_p + i].empirical_prob;
      CHECK(upper >= lower - 3.0 * se(lower));
    }
  }
}

TEST_CASE("degree count goodness of fit") {
  // p = 0: every node isolated, phi_0 = n in every trial.
  const ModelParams off{40, 3, 100, 0.0, 1};
  const auto empty_cell = RunCellSerial(off, 20, 3, 0);
  const auto fits = DegreeCountGoodnessOfFit(empty_cell, Predict(off).lambda, 1);
  REQUIRE(fits.size() == 1);
  CHECK(fits[0].degree == 0);
  CHECK(fits[0].empirical_zero_freq == 0.0);
  CHECK(fits[0].expected_zero_prob == doctest::Approx(0.0));
  CHECK(fits[0].within_3_sigma);

  // Deep supercritical: no isolated nodes expected or observed.
  const ModelParams dense{200, 20, 1000, 0.9, 2};
  const auto dense_cell = RunCellSerial(dense, 30, 5, 0);
  const auto dense_fits = DegreeCountGoodnessOfFit(dense_cell, Predict(dense).lambda, 2);
  REQUIRE(dense_fits.size() == 2);
  CHECK(dense_fits[0].expected_zero_prob == doctest::Approx(1.0));
  CHECK(dense_fits[0].empirical_zero_freq == 1.0);
  CHECK(dense_fits[0].within_3_sigma);
  CHECK(dense_fits[1].within_3_sigma);

  CHECK_THROWS_AS(DegreeCountGoodnessOfFit(dense_cell, std::vector<double>{0.1}, 2),
                  std::invalid_argument);
}
