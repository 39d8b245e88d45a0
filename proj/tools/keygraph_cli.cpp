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

// keygraph: analysis and simulation of k-connectivity in secure sensor
// networks with random key predistribution and on/off channels.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "keygraph/analysis.hpp"
#include "keygraph/experiment.hpp"
#include "keygraph/report.hpp"

namespace {

using keygraph::FormatSignificant;
using keygraph::RoundSignificant;
using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 42;

struct Common {
  std::string format = "table";
  std::string output;
  std::string seed = std::to_string(kDefaultSeed);
  int jobs = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t ParseSeed(const std::string& text) {
  if (text == "random") {
    std::random_device device;
    return (static_cast<std::uint64_t>(device()) << 32) | device();
  }
  std::size_t used = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text.front() == '-') {
    throw UsageError(fmt::format("--seed expects an unsigned integer or 'random', got '{}'", text));
  }
  return value;
}

int ResolveJobs(int flag) {
  if (const char* env = std::getenv("KEYGRAPH_JOBS"); env != nullptr && *env != '\0') {
    try {
      const int jobs = std::stoi(env);
      if (jobs >= 1) return jobs;
    } catch (const std::exception&) {
    }
    throw UsageError(fmt::format("KEYGRAPH_JOBS must be a positive integer, got '{}'", env));
  }
  if (flag < 0) throw UsageError("--jobs must be >= 0");
  return flag;
}

// "a:b" or "a:b:step"
keygraph::RingSizeRange ParseRingRange(const std::string& text) {
  std::vector<std::size_t> parts;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ':')) {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (piece.empty() || used != piece.size() || piece.front() == '-') {
      throw UsageError(fmt::format("--K expects a:b[:step], got '{}'", text));
    }
    parts.push_back(value);
  }
  if (parts.size() == 1) return {parts[0], parts[0], 1};
  if (parts.size() == 2) return {parts[0], parts[1], 1};
  if (parts.size() == 3) return {parts[0], parts[1], parts[2]};
  throw UsageError(fmt::format("--K expects a:b[:step], got '{}'", text));
}

std::vector<double> ParseProbabilityList(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    std::size_t used = 0;
    double value = 0;
    try {
      value = std::stod(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (piece.empty() || used != piece.size()) {
      throw UsageError(fmt::format("--p expects a comma-separated list, got '{}'", text));
    }
    values.push_back(value);
  }
  return values;
}

void Emit(const Common& common, const std::string& text) {
  if (common.output.empty() || common.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(common.output, std::ios::binary);
  if (!file) throw std::runtime_error(fmt::format("cannot write '{}'", common.output));
  file << text;
}

void AddFormatOptions(CLI::App* cmd, Common& common, bool simulation) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "table"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", common.output, "Output file (default: stdout)");
  if (simulation) {
    cmd->add_option("--seed", common.seed,
                    "Master seed: unsigned integer or 'random'")
        ->capture_default_str();
    cmd->add_option("--jobs", common.jobs,
                    "Worker threads, 0 = all cores (KEYGRAPH_JOBS overrides)")
        ->capture_default_str();
  }
}

// Key/value report printed as a table, CSV or JSON object.
std::string RenderRecord(const std::string& format,
                         const std::vector<std::pair<std::string, json>>& fields) {
  if (format == "json") {
    json doc = json::object();
    for (const auto& [key, value] : fields) doc[key] = value;
    return doc.dump(2) + "\n";
  }
  auto text = [](const json& value) {
    if (value.is_number_float()) return FormatSignificant(value.get<double>());
    if (value.is_string()) return value.get<std::string>();
    return value.dump();
  };
  std::string out;
  if (format == "csv") {
    out += "field,value\n";
    for (const auto& [key, value] : fields) out += fmt::format("{},{}\n", key, text(value));
  } else {
    for (const auto& [key, value] : fields) out += fmt::format("{:<22}{}\n", key, text(value));
  }
  return out;
}

void WarnAsymptoticConditions(const keygraph::ModelParams& params) {
  if (params.pool_size < params.nodes) {
    std::cerr << fmt::format("warning: P = {} < n = {}; the limit law assumes P grows at least linearly in n\n",
                             params.pool_size, params.nodes);
  }
  if (static_cast<double>(params.ring_size) > 0.1 * static_cast<double>(params.pool_size)) {
    std::cerr << fmt::format("warning: K/P = {} > 0.1; the limit law assumes K/P -> 0\n",
                             FormatSignificant(static_cast<double>(params.ring_size) /
                                               static_cast<double>(params.pool_size)));
  }
}

void RequireAnalysable(const keygraph::ModelParams& params) {
  params.Validate();
  if (params.nodes < 3) {
    throw std::invalid_argument(fmt::format("n >= 3 required, got n = {}", params.nodes));
  }
}

void RunAnalyze(const keygraph::ModelParams& params, bool approx, const Common& common) {
  RequireAnalysable(params);
  WarnAsymptoticConditions(params);
  const auto model = approx ? keygraph::EdgeModel::kApproximate : keygraph::EdgeModel::kExact;
  const keygraph::AsymptoticPrediction pred = keygraph::Predict(params, model);
  std::vector<std::pair<std::string, json>> fields = {
      {"n", params.nodes},
      {"K", params.ring_size},
      {"P", params.pool_size},
      {"p", RoundSignificant(params.channel_on)},
      {"k", params.level},
      {"edge_model", approx ? "approximate" : "exact"},
      {"s", RoundSignificant(pred.probabilities.key_share)},
      {"q", RoundSignificant(pred.probabilities.edge)},
      {"q_approx", RoundSignificant(pred.probabilities.edge_approx)},
      {"alpha", RoundSignificant(pred.scaling.alpha)},
      {"beta", RoundSignificant(pred.scaling.beta)},
      {"regime", std::string(keygraph::ToString(pred.scaling.regime))},
      {"prob_k_connected", RoundSignificant(pred.prob_k_connected)},
      {"prob_min_degree_ge_k", RoundSignificant(pred.prob_min_degree_ge_k)},
  };
  for (std::size_t h = 0; h < pred.lambda.size(); ++h) {
    fields.emplace_back(fmt::format("lambda_{}", h), RoundSignificant(pred.lambda[h]));
  }
  Emit(common, RenderRecord(common.format, fields));
}

std::string RenderCells(const keygraph::SweepConfig& config,
                        const std::vector<keygraph::CellResult>& cells,
                        const std::string& format) {
  if (format == "json") return keygraph::SweepJson(config, cells).dump(2) + "\n";
  if (format == "csv") return keygraph::SweepCsv(config, cells);
  return keygraph::SweepTable(config, cells);
}

void RunSimulate(const keygraph::ModelParams& params, std::size_t trials,
                 const Common& common) {
  RequireAnalysable(params);
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  keygraph::SweepConfig config;
  config.nodes = params.nodes;
  config.pool_size = params.pool_size;
  config.level = params.level;
  config.channel_values = {params.channel_on};
  config.ring_sizes = {params.ring_size, params.ring_size, 1};
  config.trials = trials;
  config.master_seed = ParseSeed(common.seed);
  config.Validate();
  const int jobs = ResolveJobs(common.jobs);
  const auto cells = keygraph::RunSweep(config, jobs);
  Emit(common, RenderCells(config, cells, common.format));
}

void RunSweepCommand(keygraph::SweepConfig config, const std::string& p_list,
                     const std::string& k_range, const std::string& plot_path,
                     const Common& common) {
  config.channel_values = ParseProbabilityList(p_list);
  config.ring_sizes = ParseRingRange(k_range);
  config.master_seed = ParseSeed(common.seed);
  config.Validate();
  const int jobs = ResolveJobs(common.jobs);
  if (!plot_path.empty() && (common.output.empty() || common.format != "csv")) {
    throw UsageError("--emit-plot requires --format csv and --output FILE");
  }
  const auto cells = keygraph::RunSweep(config, jobs);
  Emit(common, RenderCells(config, cells, common.format));
  if (!plot_path.empty()) {
    std::ofstream plot(plot_path, std::ios::binary);
    if (!plot) throw std::runtime_error(fmt::format("cannot write '{}'", plot_path));
    plot << keygraph::GnuplotScript(config, common.output);
  }
}

void RunDimension(std::size_t n, std::size_t pool, double p, std::size_t k, double target,
                  bool approx, const Common& common) {
  RequireAnalysable({n, 1, pool, p, k});
  const auto model = approx ? keygraph::EdgeModel::kApproximate : keygraph::EdgeModel::kExact;
  const auto design = keygraph::DimensionKeyRing(n, pool, p, k, target, model);
  if (!design) {
    throw std::runtime_error(fmt::format(
        "target {} not reachable with any K <= P = {}", FormatSignificant(target), pool));
  }
  std::vector<std::pair<std::string, json>> fields = {
      {"n", n},
      {"P", pool},
      {"p", RoundSignificant(p)},
      {"k", k},
      {"target", RoundSignificant(target)},
      {"edge_model", approx ? "approximate" : "exact"},
      {"K", design->ring_size},
      {"prob_at_K", RoundSignificant(design->prob_at_ring_size)},
  };
  fields.emplace_back("prob_at_K_minus_1", design->prob_below
                                               ? json(RoundSignificant(*design->prob_below))
                                               : json(nullptr));
  Emit(common, RenderRecord(common.format, fields));
}

void RunDegreeDist(const keygraph::ModelParams& params, std::size_t trials,
                   const Common& common) {
  RequireAnalysable(params);
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const std::uint64_t seed = ParseSeed(common.seed);
  const int jobs = ResolveJobs(common.jobs);
  const keygraph::CellResult cell = keygraph::RunCell(params, trials, seed, 0, 0.95, jobs);
  const auto pred = keygraph::Predict(params);
  const auto fits = keygraph::DegreeCountGoodnessOfFit(cell, pred.lambda, params.level);

  std::string out;
  if (common.format == "json") {
    json doc;
    doc["params"] = {{"n", params.nodes},      {"K", params.ring_size},
                     {"P", params.pool_size},  {"p", RoundSignificant(params.channel_on)},
                     {"k", params.level},      {"trials", trials}};
    doc["master_seed"] = seed;
    doc["alpha"] = RoundSignificant(cell.alpha);
    doc["count_mindeg"] = cell.count_min_degree_ge_k;
    doc["count_kconn"] = cell.count_k_connected;
    doc["count_gap"] = cell.count_gap;
    auto& rows = doc["degrees"] = json::array();
    for (const auto& fit : fits) {
      rows.push_back({{"h", fit.degree},
                      {"lambda", RoundSignificant(pred.lambda[fit.degree])},
                      {"empirical_p_zero", RoundSignificant(fit.empirical_zero_freq)},
                      {"poisson_p_zero", RoundSignificant(fit.expected_zero_prob)},
                      {"abs_dev", RoundSignificant(fit.abs_deviation)},
                      {"std_err", RoundSignificant(fit.std_error)},
                      {"within_3sigma", fit.within_3_sigma}});
    }
    out = doc.dump(2) + "\n";
  } else if (common.format == "csv") {
    out = "h,lambda,empirical_p_zero,poisson_p_zero,abs_dev,std_err,within_3sigma\n";
    for (const auto& fit : fits) {
      out += fmt::format("{},{},{},{},{},{},{}\n", fit.degree,
                         FormatSignificant(pred.lambda[fit.degree]),
                         FormatSignificant(fit.empirical_zero_freq),
                         FormatSignificant(fit.expected_zero_prob),
                         FormatSignificant(fit.abs_deviation), FormatSignificant(fit.std_error),
                         fit.within_3_sigma ? "true" : "false");
    }
  } else {
    out += fmt::format("{:>4}{:>14}{:>18}{:>16}{:>12}{:>12}{:>8}\n", "h", "lambda",
                       "empirical P[0]", "poisson P[0]", "abs_dev", "std_err", "3sigma");
    for (const auto& fit : fits) {
      out += fmt::format("{:>4}{:>14}{:>18}{:>16}{:>12}{:>12}{:>8}\n", fit.degree,
                         FormatSignificant(pred.lambda[fit.degree]),
                         FormatSignificant(fit.empirical_zero_freq),
                         FormatSignificant(fit.expected_zero_prob),
                         FormatSignificant(fit.abs_deviation), FormatSignificant(fit.std_error),
                         fit.within_3_sigma ? "ok" : "FAIL");
    }
    out += fmt::format("min degree >= k but not k-connected: {} of {} trials\n", cell.count_gap,
                       trials);
  }
  Emit(common, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulation and analysis of k-connectivity under random key "
               "predistribution with on/off channels"};
  app.require_subcommand(1);

  keygraph::ModelParams params{2000, 18, 10000, 0.2, 2};
  std::size_t trials = 1000;
  bool approx = false;
  double target = 0.9;
  Common common;

  auto add_model = [&](CLI::App* cmd, bool with_ring) {
    cmd->add_option("--n", params.nodes, "Number of nodes")->capture_default_str();
    if (with_ring) cmd->add_option("--K", params.ring_size, "Key ring size")->capture_default_str();
    cmd->add_option("--P", params.pool_size, "Key pool size")->capture_default_str();
    cmd->add_option("--p", params.channel_on, "Channel-on probability")->capture_default_str();
    cmd->add_option("--k", params.level, "Connectivity level")->capture_default_str();
  };

  auto* analyze = app.add_subcommand("analyze", "Closed-form edge probability and k-connectivity prediction");
  add_model(analyze, true);
  analyze->add_flag("--approx", approx, "Use p K^2 / P in place of the exact edge probability");
  AddFormatOptions(analyze, common, false);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate for one (K, p) cell");
  add_model(simulate, true);
  simulate->add_option("--trials", trials, "Independent samples")->capture_default_str();
  AddFormatOptions(simulate, common, true);

  keygraph::SweepConfig sweep_config;
  std::string p_list = "0.2,0.5,0.8";
  std::string k_range = "3:21";
  std::string plot_path;
  auto* sweep = app.add_subcommand("sweep", "Simulation vs. analysis over a grid of K and p");
  sweep->add_option("--n", sweep_config.nodes, "Number of nodes")->capture_default_str();
  sweep->add_option("--P", sweep_config.pool_size, "Key pool size")->capture_default_str();
  sweep->add_option("--k", sweep_config.level, "Connectivity level")->capture_default_str();
  sweep->add_option("--p", p_list, "Comma-separated channel-on probabilities")->capture_default_str();
  sweep->add_option("--K", k_range, "Key ring sizes as a:b[:step] (inclusive)")->capture_default_str();
  sweep->add_option("--trials", sweep_config.trials, "Samples per cell")->capture_default_str();
  sweep->add_option("--confidence", sweep_config.confidence, "Wilson interval level")
      ->capture_default_str();
  sweep->add_option("--emit-plot", plot_path, "Write a gnuplot script for the CSV output");
  AddFormatOptions(sweep, common, true);

  std::size_t dim_n = 2000, dim_pool = 10000, dim_k = 2;
  double dim_p = 0.2;
  auto* dimension = app.add_subcommand("dimension", "Smallest key ring reaching a target probability");
  dimension->add_option("--n", dim_n, "Number of nodes")->capture_default_str();
  dimension->add_option("--P", dim_pool, "Key pool size")->capture_default_str();
  dimension->add_option("--p", dim_p, "Channel-on probability")->capture_default_str();
  dimension->add_option("--k", dim_k, "Connectivity level")->capture_default_str();
  dimension->add_option("--target", target, "Target probability in (0, 1)")->capture_default_str();
  dimension->add_flag("--approx", approx, "Use p K^2 / P in place of the exact edge probability");
  AddFormatOptions(dimension, common, false);

  auto* degree = app.add_subcommand("degree-dist", "Empirical vs. Poisson low-degree counts");
  add_model(degree, true);
  degree->add_option("--trials", trials, "Independent samples")->capture_default_str();
  AddFormatOptions(degree, common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    for (char& c : message) {
      if (c == '\n') c = ' ';
    }
    std::cerr << "error: " << message << "\n";
    return 2;
  }

  try {
    if (*analyze) {
      RunAnalyze(params, approx, common);
    } else if (*simulate) {
      RunSimulate(params, trials, common);
    } else if (*sweep) {
      RunSweepCommand(sweep_config, p_list, k_range, plot_path, common);
    } else if (*dimension) {
      RunDimension(dim_n, dim_pool, dim_p, dim_k, target, approx, common);
    } else if (*degree) {
      RunDegreeDist(params, trials, common);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
