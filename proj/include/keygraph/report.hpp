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

#include <span>
#include <string>
#include <string_view>

#include "json.hpp"
#include "keygraph/experiment.hpp"

namespace keygraph {

inline constexpr std::string_view kSweepCsvHeader =
    "n,P,k,p,K,trials,count_kconn,count_mindeg,count_gap,emp_prob,ci_low,ci_high,"
    "analytical_prob,alpha";

// printf "%.6g".
std::string FormatSignificant(double value);

// Value as it appears in the CSV, parsed back to a double.
double RoundSignificant(double value);

// Header line plus one row per cell, in the order given.
std::string SweepCsv(const SweepConfig& config, std::span<const CellResult> cells);

// {"config": {...}, "master_seed": ..., "cells": [...]} with the CSV columns
// per cell, numbers rounded exactly as in the CSV.
nlohmann::json SweepJson(const SweepConfig& config, std::span<const CellResult> cells);

// Fixed-width text table of the same columns.
std::string SweepTable(const SweepConfig& config, std::span<const CellResult> cells);

// gnuplot script drawing emp_prob with Wilson error bars and analytical_prob
// against K, one colour per p. `csv_path` is embedded verbatim.
std::string GnuplotScript(const SweepConfig& config, std::string_view csv_path);

}  // namespace keygraph
