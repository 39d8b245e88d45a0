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

#include "keygraph/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

#include <boost/math/distributions/normal.hpp>
#include <fmt/format.h>
#include <omp.h>

#include "keygraph/analysis.hpp"
#include "keygraph/connectivity.hpp"

namespace keygraph {
namespace {

int ResolveJobs(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

struct CellSpec {
  ModelParams params;
  std::size_t channel_index = 0;
};

std::vector<CellSpec> EnumerateCells(const SweepConfig& config) {
  std::vector<CellSpec> cells;
  const auto ring_sizes = config.ring_sizes.Values();
  for (std::size_t pi = 0; pi < config.channel_values.size(); ++pi) {
    for (std::size_t ring_size : ring_sizes) {
      cells.push_back({{config.nodes, ring_size, config.pool_size,
                        config.channel_values[pi], config.level},
                       pi});
    }
  }
  return cells;
}

std::string DescribeCell(const ModelParams& params) {
  return fmt::format("cell (K={}, p={})", params.ring_size, params.channel_on);
}

void SortByChannelThenRing(std::vector<CellResult>& cells) {
  std::stable_sort(cells.begin(), cells.end(), [](const CellResult& a, const CellResult& b) {
    if (a.channel_on != b.channel_on) return a.channel_on < b.channel_on;
    return a.ring_size < b.ring_size;
  });
}

}  // namespace

std::vector<std::size_t> RingSizeRange::Values() const {
  std::vector<std::size_t> values;
  if (step == 0) return values;
  for (std::size_t k = first; k <= last; k += step) values.push_back(k);
  return values;
}

void SweepConfig::Validate() const {
  if (nodes < 3) throw std::invalid_argument(fmt::format("n >= 3 required, got n = {}", nodes));
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (level < 1) throw std::invalid_argument("k must be >= 1");
  if (ring_sizes.step == 0) throw std::invalid_argument("K step must be >= 1");
  if (ring_sizes.first < 1 || ring_sizes.first > ring_sizes.last) {
    throw std::invalid_argument(
        fmt::format("empty K range {}:{}", ring_sizes.first, ring_sizes.last));
  }
  if (ring_sizes.last > pool_size) {
    throw std::invalid_argument(
        fmt::format("K = {} exceeds key pool size P = {}", ring_sizes.last, pool_size));
  }
  if (channel_values.empty()) throw std::invalid_argument("no p values given");
  for (double p : channel_values) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument(fmt::format("p = {} outside [0, 1]", p));
    }
  }
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::invalid_argument(fmt::format("confidence = {} outside (0, 1)", confidence));
  }
}

TrialRecord RunTrial(const ModelParams& params, std::uint64_t seed) {
  Rng rng(seed);
  const Graph g = SampleIntersectionGraph(params, rng);
  const ConnectivityVerdict verdict = IsKConnected(g, params.level);
  TrialRecord record;
  record.k_connected = verdict.is_k_connected;
  record.min_degree = verdict.min_degree;
  record.low_degree_counts.assign(params.level + 1, 0);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const std::size_t d = g.degree(v);
    if (d <= params.level) ++record.low_degree_counts[d];
  }
  return record;
}

std::uint64_t TrialSeed(std::uint64_t master_seed, std::size_t ring_size,
                        std::size_t channel_index, std::size_t trial) {
  return DeriveSeed(master_seed, {ring_size, channel_index, trial});
}

std::pair<double, double> WilsonInterval(std::size_t successes, std::size_t trials,
                                         double confidence) {
  if (trials < 1 || successes > trials) {
    throw std::invalid_argument(
        fmt::format("invalid proportion {}/{}", successes, trials));
  }
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::invalid_argument(fmt::format("confidence = {} outside (0, 1)", confidence));
  }
  const boost::math::normal standard;
  const double z = boost::math::quantile(standard, 0.5 + confidence / 2.0);
  const double n = static_cast<double>(trials);
  const double x = static_cast<double>(successes);
  const double z2 = z * z;
  const double center = (x + z2 / 2.0) / (n + z2);
  const double half = z / (n + z2) * std::sqrt(x * (n - x) / n + z2 / 4.0);
  double low = successes == 0 ? 0.0 : std::clamp(center - half, 0.0, 1.0);
  double high = successes == trials ? 1.0 : std::clamp(center + half, 0.0, 1.0);
  return {low, high};
}

CellResult AggregateCell(const ModelParams& params, std::span<const TrialRecord> records,
                         double confidence) {
  const std::size_t k = params.level;
  CellResult cell;
  cell.ring_size = params.ring_size;
  cell.channel_on = params.channel_on;
  cell.trials = records.size();
  cell.degree_counts.assign(k + 1, 0);
  cell.zero_degree_trials.assign(k + 1, 0);
  for (const TrialRecord& r : records) {
    if (r.k_connected) ++cell.count_k_connected;
    if (r.min_degree >= k) ++cell.count_min_degree_ge_k;
    for (std::size_t h = 0; h <= k; ++h) {
      cell.degree_counts[h] += r.low_degree_counts[h];
      if (r.low_degree_counts[h] == 0) ++cell.zero_degree_trials[h];
    }
  }
  if (cell.count_k_connected > cell.count_min_degree_ge_k) {
    throw std::logic_error(DescribeCell(params) + ": k-connected graph with min degree < k");
  }
  cell.count_gap = cell.count_min_degree_ge_k - cell.count_k_connected;
  cell.empirical_prob =
      static_cast<double>(cell.count_k_connected) / static_cast<double>(cell.trials);
  std::tie(cell.ci_low, cell.ci_high) =
      WilsonInterval(cell.count_k_connected, cell.trials, confidence);
  const AsymptoticPrediction prediction = Predict(params);
  cell.analytical_prob = prediction.prob_k_connected;
  cell.alpha = prediction.scaling.alpha;
  return cell;
}

CellResult RunCellSerial(const ModelParams& params, std::size_t trials,
                         std::uint64_t master_seed, std::size_t channel_index,
                         double confidence) {
  params.Validate();
  std::vector<TrialRecord> records;
  records.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    records.push_back(
        RunTrial(params, TrialSeed(master_seed, params.ring_size, channel_index, t)));
  }
  return AggregateCell(params, records, confidence);
}

CellResult RunCell(const ModelParams& params, std::size_t trials,
                   std::uint64_t master_seed, std::size_t channel_index,
                   double confidence, int jobs) {
  params.Validate();
  std::vector<TrialRecord> records(trials);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4) num_threads(ResolveJobs(jobs))
  for (std::size_t t = 0; t < trials; ++t) {
    try {
      records[t] = RunTrial(params, TrialSeed(master_seed, params.ring_size, channel_index, t));
    } catch (...) {
#pragma omp critical(keygraph_cell_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return AggregateCell(params, records, confidence);
}

std::vector<CellResult> RunSweep(const SweepConfig& config, int jobs) {
  config.Validate();
  const std::vector<CellSpec> cells = EnumerateCells(config);
  const std::size_t trials = config.trials;
  const std::size_t tasks = cells.size() * trials;
  std::vector<TrialRecord> records(tasks);
  std::vector<std::optional<std::string>> errors(cells.size());

#pragma omp parallel for schedule(dynamic, 4) num_threads(ResolveJobs(jobs))
  for (std::size_t task = 0; task < tasks; ++task) {
    const std::size_t c = task / trials;
    const std::size_t t = task % trials;
    const CellSpec& spec = cells[c];
    try {
      records[task] = RunTrial(
          spec.params, TrialSeed(config.master_seed, spec.params.ring_size, spec.channel_index, t));
    } catch (const std::exception& e) {
#pragma omp critical(keygraph_sweep_failure)
      if (!errors[c]) errors[c] = e.what();
    }
  }

  std::vector<CellResult> results;
  results.reserve(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (errors[c]) {
      throw std::runtime_error(DescribeCell(cells[c].params) + ": " + *errors[c]);
    }
    std::span<const TrialRecord> slice(records.data() + c * trials, trials);
    results.push_back(AggregateCell(cells[c].params, slice, config.confidence));
  }
  SortByChannelThenRing(results);
  return results;
}

std::vector<CellResult> RunSweepSerial(const SweepConfig& config) {
  config.Validate();
  std::vector<CellResult> results;
  for (const CellSpec& spec : EnumerateCells(config)) {
    try {
      results.push_back(RunCellSerial(spec.params, config.trials, config.master_seed,
                                      spec.channel_index, config.confidence));
    } catch (const std::exception& e) {
      throw std::runtime_error(DescribeCell(spec.params) + ": " + e.what());
    }
  }
  SortByChannelThenRing(results);
  return results;
}

std::vector<DegreeCountFit> DegreeCountGoodnessOfFit(const CellResult& cell,
                                                     std::span<const double> lambda,
                                                     std::size_t level) {
  if (cell.trials == 0) throw std::invalid_argument("cell has no trials");
  if (lambda.size() < level || cell.zero_degree_trials.size() < level) {
    throw std::invalid_argument("degree statistics shorter than k");
  }
  const double trials = static_cast<double>(cell.trials);
  std::vector<DegreeCountFit> fits;
  for (std::size_t h = 0; h < level; ++h) {
    DegreeCountFit fit;
    fit.degree = h;
    fit.empirical_zero_freq = static_cast<double>(cell.zero_degree_trials[h]) / trials;
    fit.expected_zero_prob = std::exp(-lambda[h]);
    fit.abs_deviation = std::abs(fit.empirical_zero_freq - fit.expected_zero_prob);
    fit.std_error =
        std::sqrt(fit.expected_zero_prob * (1.0 - fit.expected_zero_prob) / trials);
    fit.within_3_sigma = fit.abs_deviation <= 3.0 * fit.std_error + 0.5 / trials;
    fits.push_back(fit);
  }
  return fits;
}

}  // namespace keygraph
