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

// Wall-clock comparison of the serial reference and the OpenMP sweep.
//
//   bench_sweep [trials] [threads]

#include <chrono>
#include <cstdlib>
#include <iostream>

#include <fmt/format.h>
#include <omp.h>

#include "keygraph/experiment.hpp"

int main(int argc, char** argv) {
  namespace chrono = std::chrono;
  keygraph::SweepConfig config;
  config.channel_values = {0.2, 0.5, 0.8};
  config.ring_sizes = {6, 18, 6};
  config.trials = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 50;
  const int threads = argc > 2 ? std::atoi(argv[2]) : omp_get_max_threads();

  auto t0 = chrono::steady_clock::now();
  const auto serial = keygraph::RunSweepSerial(config);
  auto t1 = chrono::steady_clock::now();
  const auto parallel = keygraph::RunSweep(config, threads);
  auto t2 = chrono::steady_clock::now();

  const double serial_ms = chrono::duration<double, std::milli>(t1 - t0).count();
  const double parallel_ms = chrono::duration<double, std::milli>(t2 - t1).count();
  const std::size_t graphs = serial.size() * config.trials;
  std::cout << fmt::format("cells={} trials/cell={} graphs={} n={}\n", serial.size(),
                           config.trials, graphs, config.nodes);
  std::cout << fmt::format("serial   : {:10.1f} ms  ({:.3f} ms/graph)\n", serial_ms,
                           serial_ms / static_cast<double>(graphs));
  std::cout << fmt::format("openmp x{}: {:9.1f} ms  speedup {:.2f}\n", threads, parallel_ms,
                           serial_ms / parallel_ms);
  std::cout << "results identical: " << (serial == parallel ? "yes" : "NO") << "\n";
  return serial == parallel ? 0 : 1;
}
