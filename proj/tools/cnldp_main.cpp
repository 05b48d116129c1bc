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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cnldp/bench.hpp"

namespace {

using cnldp::RunConfig;

struct CliState {
  RunConfig config;
  std::vector<std::string> algo_names;
  std::string layer_name = "lower";
  std::uint64_t u_ext = 0;
  std::uint64_t w_ext = 0;
  bool u_set = false;
  bool w_set = false;
  double kappa = 0.0;
  bool kappa_set = false;
  std::vector<double> fractions;
};

void add_graph_options(CLI::App* cmd, CliState& s) {
  cmd->add_option("--graph", s.config.graph_path, "edge-list file")->required();
  cmd->add_option("--format", s.config.format, "input format")->default_str("konect");
  cmd->add_option("--layer", s.layer_name, "query layer: upper or lower")
      ->check(CLI::IsMember({"upper", "lower"}))
      ->default_str("lower");
}

void add_estimation_options(CLI::App* cmd, CliState& s) {
  cmd->add_option("--algo", s.algo_names, "algorithm (repeatable): naive oner ss ds central")
      ->check(CLI::IsMember({"naive", "oner", "ss", "ds", "central"}));
  cmd->add_option("--epsilon", s.config.epsilons, "privacy budget (repeatable)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--eps1-fraction", s.fractions,
                  "first-round share of the two-round budget (repeatable in sweep)")
      ->check(CLI::Range(1e-9, 1.0));
  cmd->add_option("--seed", s.config.seed, "master seed");
  cmd->add_option("--out", s.config.out_path, "write rows here instead of stdout");
  cmd->add_flag("--json", s.config.json, "emit JSON lines instead of CSV");
}

void add_pair_options(CLI::App* cmd, CliState& s) {
  cmd->add_option("--u", s.u_ext, "first query vertex id (1-based, as in the file)")
      ->required();
  cmd->add_option("--w", s.w_ext, "second query vertex id")->required();
  s.u_set = s.w_set = true;
}

void finalize(CliState& s) {
  for (const auto& name : s.algo_names) {
    s.config.algos.push_back(*cnldp::parse_algorithm(name));
  }
  s.config.layer = *cnldp::parse_layer(s.layer_name);
  if (s.u_set) s.config.u_ext = s.u_ext;
  if (s.w_set) s.config.w_ext = s.w_ext;
  if (s.kappa_set) s.config.kappa = s.kappa;
  if (!s.fractions.empty()) s.config.eps1_fractions = s.fractions;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"common-neighbor estimation over bipartite graphs under edge-local privacy"};
  app.require_subcommand(1);

  CliState est, bench, sweep, dist, gen, summary;

  CLI::App* c_est = app.add_subcommand("estimate", "run the estimators on one query pair");
  add_graph_options(c_est, est);
  add_pair_options(c_est, est);
  add_estimation_options(c_est, est);
  c_est->add_option("--trials", est.config.trials, "repetitions per algorithm")
      ->check(CLI::PositiveNumber);
  c_est->add_option("--transcript-out", est.config.transcript_out,
                    "append every run's message log here as JSON lines");

  CLI::App* c_bench = app.add_subcommand("bench", "benchmark on sampled query pairs");
  add_graph_options(c_bench, bench);
  add_estimation_options(c_bench, bench);
  c_bench->add_option("--pairs", bench.config.pairs, "number of sampled pairs")
      ->check(CLI::PositiveNumber);
  c_bench->add_option("--kappa", bench.kappa, "keep only pairs with max degree > kappa * min")
      ->check(CLI::PositiveNumber);
  c_bench->add_option("--trials-per-pair", bench.config.trials_per_pair, "repetitions per pair")
      ->check(CLI::PositiveNumber);

  CLI::App* c_sweep = app.add_subcommand("sweep", "summary table across epsilon values");
  add_graph_options(c_sweep, sweep);
  add_estimation_options(c_sweep, sweep);
  c_sweep->add_option("--pairs", sweep.config.pairs, "number of sampled pairs")
      ->check(CLI::PositiveNumber);
  c_sweep->add_option("--kappa", sweep.kappa, "keep only pairs with max degree > kappa * min")
      ->check(CLI::PositiveNumber);
  c_sweep->add_option("--trials-per-pair", sweep.config.trials_per_pair, "repetitions per pair")
      ->check(CLI::PositiveNumber);

  CLI::App* c_dist = app.add_subcommand("distribution", "raw estimates for one pair");
  add_graph_options(c_dist, dist);
  add_pair_options(c_dist, dist);
  add_estimation_options(c_dist, dist);
  c_dist->add_option("--trials", dist.config.trials, "rows per algorithm")
      ->check(CLI::PositiveNumber);

  CLI::App* c_gen = app.add_subcommand("gen-synthetic", "write a random bipartite graph");
  c_gen->add_option("--n1", gen.config.n1, "upper-layer vertex count")->required();
  c_gen->add_option("--n2", gen.config.n2, "lower-layer vertex count")->required();
  c_gen->add_option("--density", gen.config.density, "independent edge probability")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  c_gen->add_option("--seed", gen.config.seed, "generator seed");
  c_gen->add_option("--out", gen.config.out_path, "output edge-list path")->required();

  CLI::App* c_summary = app.add_subcommand("summary", "print the graph summary as JSON");
  add_graph_options(c_summary, summary);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cnldp::kExitUsage;
  }

  bench.kappa_set = c_bench->count("--kappa") > 0;
  sweep.kappa_set = c_sweep->count("--kappa") > 0;

  if (c_est->parsed()) {
    finalize(est);
    return cnldp::run_estimate(est.config, std::cout, std::cerr);
  }
  if (c_bench->parsed()) {
    finalize(bench);
    return cnldp::run_bench(bench.config, std::cout, std::cerr);
  }
  if (c_sweep->parsed()) {
    finalize(sweep);
    return cnldp::run_sweep(sweep.config, std::cout, std::cerr);
  }
  if (c_dist->parsed()) {
    finalize(dist);
    return cnldp::run_distribution(dist.config, std::cout, std::cerr);
  }
  if (c_gen->parsed()) {
    finalize(gen);
    return cnldp::run_gen_synthetic(gen.config, std::cout, std::cerr);
  }
  if (c_summary->parsed()) {
    finalize(summary);
    return cnldp::run_graph_summary(summary.config, std::cout, std::cerr);
  }
  return cnldp::kExitUsage;
}
