// Copyright 2026 The cnldp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cnldp/algorithm.hpp"
#include "cnldp/graph.hpp"

namespace cnldp {

// Everything the command-line front end can ask for. Subcommands read the
// fields they care about and ignore the rest.
struct RunConfig {
  std::string graph_path;
  std::string format = "konect";
  std::vector<Algorithm> algos;  // empty means all five
  std::vector<double> epsilons;  // empty means the subcommand default
  std::optional<std::uint64_t> u_ext;
  std::optional<std::uint64_t> w_ext;
  std::size_t pairs = 100;
  std::optional<double> kappa;
  std::size_t trials = 1;
  std::size_t trials_per_pair = 1;
  std::vector<double> eps1_fractions = {0.5};
  std::uint64_t seed = 1;
  Layer layer = Layer::Lower;
  std::string out_path;        // empty writes to stdout
  bool json = false;           // JSON lines instead of CSV rows
  std::string transcript_out;  // per-run message log, JSON lines

  // gen-synthetic
  std::uint32_t n1 = 0;
  std::uint32_t n2 = 0;
  double density = 0.0;
};

// One emitted measurement. The CSV column order is exactly this field
// order; the plan columns stay empty for algorithms without a plan.
struct MetricRow {
  std::string algo;
  double epsilon;
  std::uint64_t u_id;
  std::uint64_t w_id;
  double true_c2;
  double estimate;
  double abs_error;
  std::uint64_t comm_bytes;
  std::optional<double> eps0;
  std::optional<double> eps1;
  std::optional<double> eps2;
  std::optional<double> alpha;
  std::uint64_t trial;
  std::uint64_t seed;
  double analytic_l2;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitInfeasible = 4;

// Shortest round-trip decimal form; used everywhere a double is printed so
// reruns are byte-identical.
std::string format_double(double v);

std::string metric_row_header();
std::string metric_row_csv(const MetricRow& row);
std::string metric_row_json(const MetricRow& row);

// Subcommand bodies. Rows (and any summary) go to `out` unless the config
// routes them to a file; diagnostics go to `err`. The return value is the
// process exit code.
int run_estimate(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_bench(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_distribution(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_gen_synthetic(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_graph_summary(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace cnldp
