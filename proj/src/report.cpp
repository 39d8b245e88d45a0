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

#include "keygraph/report.hpp"

#include <algorithm>
#include <cstdlib>

#include <fmt/format.h>
#include <fmt/printf.h>

namespace keygraph {
namespace {

struct Row {
  std::string cells[14];
};

Row MakeRow(const SweepConfig& config, const CellResult& cell) {
  return {{fmt::format("{}", config.nodes), fmt::format("{}", config.pool_size),
           fmt::format("{}", config.level), FormatSignificant(cell.channel_on),
           fmt::format("{}", cell.ring_size), fmt::format("{}", cell.trials),
           fmt::format("{}", cell.count_k_connected),
           fmt::format("{}", cell.count_min_degree_ge_k), fmt::format("{}", cell.count_gap),
           FormatSignificant(cell.empirical_prob), FormatSignificant(cell.ci_low),
           FormatSignificant(cell.ci_high), FormatSignificant(cell.analytical_prob),
           FormatSignificant(cell.alpha)}};
}

}  // namespace

std::string FormatSignificant(double value) { return fmt::sprintf("%.6g", value); }

double RoundSignificant(double value) {
  return std::strtod(FormatSignificant(value).c_str(), nullptr);
}

std::string SweepCsv(const SweepConfig& config, std::span<const CellResult> cells) {
  std::string out(kSweepCsvHeader);
  out += '\n';
  for (const CellResult& cell : cells) {
    const Row row = MakeRow(config, cell);
    for (std::size_t i = 0; i < 14; ++i) {
      if (i) out += ',';
      out += row.cells[i];
    }
    out += '\n';
  }
  return out;
}

nlohmann::json SweepJson(const SweepConfig& config, std::span<const CellResult> cells) {
  nlohmann::json doc;
  doc["config"] = {
      {"n", config.nodes},
      {"P", config.pool_size},
      {"k", config.level},
      {"p_values", config.channel_values},
      {"K_range",
       {{"first", config.ring_sizes.first},
        {"last", config.ring_sizes.last},
        {"step", config.ring_sizes.step}}},
      {"trials", config.trials},
      {"confidence", config.confidence},
  };
  doc["master_seed"] = config.master_seed;
  auto& rows = doc["cells"] = nlohmann::json::array();
  for (const CellResult& cell : cells) {
    rows.push_back({
        {"n", config.nodes},
        {"P", config.pool_size},
        {"k", config.level},
        {"p", RoundSignificant(cell.channel_on)},
        {"K", cell.ring_size},
        {"trials", cell.trials},
        {"count_kconn", cell.count_k_connected},
        {"count_mindeg", cell.count_min_degree_ge_k},
        {"count_gap", cell.count_gap},
        {"emp_prob", RoundSignificant(cell.empirical_prob)},
        {"ci_low", RoundSignificant(cell.ci_low)},
        {"ci_high", RoundSignificant(cell.ci_high)},
        {"analytical_prob", RoundSignificant(cell.analytical_prob)},
        {"alpha", RoundSignificant(cell.alpha)},
    });
  }
  return doc;
}

std::string SweepTable(const SweepConfig& config, std::span<const CellResult> cells) {
  std::string out;
  std::string header(kSweepCsvHeader);
  std::size_t start = 0;
  while (start <= header.size()) {
    const std::size_t comma = std::min(header.find(',', start), header.size());
    out += fmt::format("{:>16}", header.substr(start, comma - start));
    start = comma + 1;
  }
  out += '\n';
  for (const CellResult& cell : cells) {
    const Row row = MakeRow(config, cell);
    for (const auto& field : row.cells) out += fmt::format("{:>16}", field);
    out += '\n';
  }
  return out;
}

std::string GnuplotScript(const SweepConfig& config, std::string_view csv_path) {
  std::string out;
  out += "set datafile separator ','\n";
  out += "set key left top\n";
  out += "set xlabel 'K'\n";
  out += fmt::format("set ylabel 'P[{}-connected]'\n", config.level);
  out += fmt::format("set title 'n={}, P={}, k={}'\n", config.nodes, config.pool_size,
                     config.level);
  out += "set yrange [-0.05:1.05]\n";
  out += fmt::format("set xrange [{}:{}]\n",
                     static_cast<double>(config.ring_sizes.first) - 0.5,
                     static_cast<double>(config.ring_sizes.last) + 0.5);
  out += fmt::format("csv = '{}'\n", csv_path);
  out += "plot \\\n";
  const auto& ps = config.channel_values;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const std::string p = FormatSignificant(ps[i]);
    // Column 4 is p, 5 is K; rows of other p values map to NaN and are skipped.
    auto pick = [&](int col) {
      return fmt::format("(abs($4-{})<1e-9 ? ${} : NaN)", p, col);
    };
    out += fmt::format(
        "  csv skip 1 using 5:{}:{}:{} with yerrorbars lc {} pt 7 title 'simulation p={}', \\\n",
        pick(10), pick(11), pick(12), i + 1, p);
    out += fmt::format("  csv skip 1 using 5:{} with lines lc {} dt 2 title 'analysis p={}'{}\n",
                       pick(13), i + 1, p, i + 1 < ps.size() ? ", \\" : "");
  }
  return out;
}

}  // namespace keygraph
