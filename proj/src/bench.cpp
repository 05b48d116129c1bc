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

#include "cnldp/bench.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "cnldp/budget.hpp"
#include "cnldp/errors.hpp"
#include "cnldp/estimators.hpp"
#include "cnldp/protocol.hpp"

namespace cnldp {

namespace {

const std::vector<Algorithm> kAllAlgorithms = {
    Algorithm::Naive, Algorithm::OneR, Algorithm::SingleSource, Algorithm::DoubleSource,
    Algorithm::Central};

// Streams are separated per (algorithm, epsilon) so adding an algorithm or
// an epsilon to a run never perturbs the other rows.
std::uint64_t algo_master(std::uint64_t seed, Algorithm algo, double eps) {
  const std::uint64_t a = RandomSource::mix(seed, static_cast<std::uint64_t>(algo) + 1);
  return RandomSource::mix(a, std::bit_cast<std::uint64_t>(eps));
}

std::vector<Algorithm> effective_algos(const RunConfig& config) {
  return config.algos.empty() ? kAllAlgorithms : config.algos;
}

std::vector<double> effective_epsilons(const RunConfig& config, bool sweep) {
  if (!config.epsilons.empty()) return config.epsilons;
  if (sweep) return {1.0, 1.5, 2.0, 2.5, 3.0};
  return {2.0};
}

void validate_format(const RunConfig& config) {
  if (config.format != "konect") {
    throw ValidationError("unsupported graph format '" + config.format + "'");
  }
}

// Routes rows either to the caller's stream or to --out.
class OutputTarget {
 public:
  OutputTarget(const RunConfig& config, std::ostream& fallback) {
    if (config.out_path.empty()) {
      stream_ = &fallback;
      return;
    }
    file_.open(config.out_path);
    if (!file_) throw ValidationError("cannot write '" + config.out_path + "'");
    stream_ = &file_;
  }

  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

int guarded(std::ostream& err, const std::function<void()>& body) {
  try {
    body();
    return kExitOk;
  } catch (const InfeasibleSamplingError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
}

VertexRef resolve_vertex(const BipartiteGraph& g, Layer layer, std::uint64_t external_id) {
  const auto index = g.internal_index(layer, external_id);
  if (!index) {
    throw ValidationError("no vertex with id " + std::to_string(external_id) + " on the " +
                          layer_name(layer) + " layer");
  }
  return {layer, *index};
}

QueryPair resolve_pair(const BipartiteGraph& g, const RunConfig& config) {
  if (!config.u_ext || !config.w_ext) {
    throw ValidationError("this subcommand needs both --u and --w");
  }
  const QueryPair q{resolve_vertex(g, config.layer, *config.u_ext),
                    resolve_vertex(g, config.layer, *config.w_ext)};
  g.check_pair(q);
  return q;
}

struct PairContext {
  QueryPair q;
  std::uint64_t u_id;
  std::uint64_t w_id;
  double c2;
  double d_u;
  double d_w;
};

PairContext make_context(const BipartiteGraph& g, const QueryPair& q) {
  return {q,
          g.external_id(q.u),
          g.external_id(q.w),
          static_cast<double>(exact_common_neighbors(g, q)),
          static_cast<double>(g.degree(q.u)),
          static_cast<double>(g.degree(q.w))};
}

MetricRow make_row(const BipartiteGraph& g, const PairContext& ctx, Algorithm algo, double eps,
                   std::uint64_t trial, std::uint64_t seed, const EstimateReport& report) {
  const double n1 = g.layer_size(opposite(ctx.q.u.layer));
  MetricRow row;
  row.algo = algorithm_name(algo);
  row.epsilon = eps;
  row.u_id = ctx.u_id;
  row.w_id = ctx.w_id;
  row.true_c2 = ctx.c2;
  row.estimate = report.value;
  row.abs_error = std::fabs(report.value - ctx.c2);
  row.comm_bytes = report.comm_bytes;
  if (report.plan) {
    row.eps0 = report.plan->eps0;
    row.eps1 = report.plan->eps1;
    row.eps2 = report.plan->eps2;
    row.alpha = report.plan->alpha;
  }
  row.trial = trial;
  row.seed = seed;
  row.analytic_l2 = analytic_l2(algo, ctx.c2, ctx.d_u, ctx.d_w, n1, eps,
                                report.plan ? &*report.plan : nullptr);
  return row;
}

struct AggregateStats {
  std::uint64_t n = 0;
  double abs_sum = 0.0;
  double sq_sum = 0.0;
  double analytic_sum = 0.0;
  double bytes_sum = 0.0;
  std::uint64_t vertex_ns = 0;
  std::uint64_t curator_ns = 0;

  void add(const MetricRow& row, const EstimateReport& report) {
    ++n;
    abs_sum += row.abs_error;
    sq_sum += row.abs_error * row.abs_error;
    analytic_sum += row.analytic_l2;
    bytes_sum += static_cast<double>(row.comm_bytes);
    vertex_ns += report.vertex_ns;
    curator_ns += report.curator_ns;
  }

  double mae() const { return n ? abs_sum / n : 0.0; }
  double mean_l2() const { return n ? sq_sum / n : 0.0; }
  double mean_analytic() const { return n ? analytic_sum / n : 0.0; }
  double mean_bytes() const { return n ? bytes_sum / n : 0.0; }
};

void emit_row(std::ostream& os, bool json, const MetricRow& row) {
  os << (json ? metric_row_json(row) : metric_row_csv(row)) << '\n';
}

void emit_header(std::ostream& os, bool json) {
  if (!json) os << metric_row_header() << '\n';
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

std::string metric_row_header() {
  return "algo,epsilon,u_id,w_id,true_c2,estimate,abs_error,comm_bytes,"
         "eps0,eps1,eps2,alpha,trial,seed,analytic_l2";
}

namespace {

std::string opt_csv(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

std::string opt_json(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string("null");
}

}  // namespace

std::string metric_row_csv(const MetricRow& r) {
  std::ostringstream os;
  os << r.algo << ',' << format_double(r.epsilon) << ',' << r.u_id << ',' << r.w_id << ','
     << format_double(r.true_c2) << ',' << format_double(r.estimate) << ','
     << format_double(r.abs_error) << ',' << r.comm_bytes << ',' << opt_csv(r.eps0) << ','
     << opt_csv(r.eps1) << ',' << opt_csv(r.eps2) << ',' << opt_csv(r.alpha) << ',' << r.trial
     << ',' << r.seed << ',' << format_double(r.analytic_l2);
  return os.str();
}

std::string metric_row_json(const MetricRow& r) {
  std::ostringstream os;
  os << "{\"algo\":\"" << r.algo << "\",\"epsilon\":" << format_double(r.epsilon)
     << ",\"u_id\":" << r.u_id << ",\"w_id\":" << r.w_id
     << ",\"true_c2\":" << format_double(r.true_c2)
     << ",\"estimate\":" << format_double(r.estimate)
     << ",\"abs_error\":" << format_double(r.abs_error) << ",\"comm_bytes\":" << r.comm_bytes
     << ",\"eps0\":" << opt_json(r.eps0) << ",\"eps1\":" << opt_json(r.eps1)
     << ",\"eps2\":" << opt_json(r.eps2) << ",\"alpha\":" << opt_json(r.alpha)
     << ",\"trial\":" << r.trial << ",\"seed\":" << r.seed
     << ",\"analytic_l2\":" << format_double(r.analytic_l2) << "}";
  return os.str();
}

int run_estimate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate_format(config);
    const BipartiteGraph g = load_edge_list(config.graph_path);
    const PairContext ctx = make_context(g, resolve_pair(g, config));

    std::ofstream transcript_file;
    if (!config.transcript_out.empty()) {
      transcript_file.open(config.transcript_out);
      if (!transcript_file) {
        throw ValidationError("cannot write '" + config.transcript_out + "'");
      }
    }

    OutputTarget target(config, out);
    emit_header(target.stream(), config.json);
    for (const Algorithm algo : effective_algos(config)) {
      for (const double eps : effective_epsilons(config, false)) {
        const std::uint64_t master = algo_master(config.seed, algo, eps);
        for (std::uint64_t t = 0; t < config.trials; ++t) {
          Transcript transcript;
          EstimatorOptions options;
          options.eps1_fraction = config.eps1_fractions.front();
          options.transcript = transcript_file.is_open() ? &transcript : nullptr;
          const RandomSource rng(master, t);
          const EstimateReport report = run_estimator(algo, g, ctx.q, eps, rng, options);
          emit_row(target.stream(), config.json, make_row(g, ctx, algo, eps, t, config.seed, report));
          if (transcript_file.is_open()) transcript_file << transcript.to_json_lines();
        }
      }
    }
  });
}

namespace {

// Shared body of bench and sweep: fixed pairs, every algorithm, every
// epsilon, trials_per_pair repetitions. Rows are optionally emitted;
// aggregates are always returned. Sweep reruns the two-round algorithm per
// requested split fraction; bench uses the first.
struct BenchResult {
  // key: (algo name with any sweep suffix stripped, eps, fraction slot)
  std::map<std::tuple<std::string, double, double>, AggregateStats> stats;
};

BenchResult bench_core(const BipartiteGraph& g, const std::vector<PairContext>& pairs,
                       const RunConfig& config, const std::vector<double>& epsilons,
                       bool per_fraction, std::ostream* rows_out, bool json) {
  BenchResult result;
  for (const Algorithm algo : effective_algos(config)) {
    const std::vector<double> fractions =
        per_fraction && algo == Algorithm::SingleSource
            ? config.eps1_fractions
            : std::vector<double>{config.eps1_fractions.front()};
    for (const double eps : epsilons) {
      for (const double fraction : fractions) {
        const std::uint64_t master =
            RandomSource::mix(algo_master(config.seed, algo, eps),
                              std::bit_cast<std::uint64_t>(fraction));
        auto& agg = result.stats[{algorithm_name(algo), eps,
                                  algo == Algorithm::SingleSource ? fraction : 0.0}];
        for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
          const PairContext& ctx = pairs[pi];
          for (std::uint64_t t = 0; t < config.trials_per_pair; ++t) {
            const std::uint64_t trial = pi * config.trials_per_pair + t;
            EstimatorOptions options;
            options.eps1_fraction = fraction;
            const RandomSource rng(master, trial);
            const EstimateReport report = run_estimator(algo, g, ctx.q, eps, rng, options);
            const MetricRow row = make_row(g, ctx, algo, eps, trial, config.seed, report);
            agg.add(row, report);
            if (rows_out) emit_row(*rows_out, json, row);
          }
        }
      }
    }
  }
  return result;
}

std::vector<PairContext> sampled_contexts(const BipartiteGraph& g, const RunConfig& config) {
  std::vector<PairContext> out;
  for (const QueryPair& q :
       sample_query_pairs(g, config.layer, config.pairs, config.kappa, config.seed)) {
    out.push_back(make_context(g, q));
  }
  return out;
}

}  // namespace

int run_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate_format(config);
    const BipartiteGraph g = load_edge_list(config.graph_path);
    const std::vector<PairContext> pairs = sampled_contexts(g, config);
    const std::vector<double> epsilons = effective_epsilons(config, false);

    OutputTarget target(config, out);
    emit_header(target.stream(), config.json);
    const BenchResult result =
        bench_core(g, pairs, config, epsilons, false, &target.stream(), config.json);

    for (const auto& [key, agg] : result.stats) {
      const auto& [name, eps, fraction] = key;
      target.stream() << "# algo=" << name << " epsilon=" << format_double(eps)
                      << " pairs=" << pairs.size()
                      << " trials_per_pair=" << config.trials_per_pair
                      << " mae=" << format_double(agg.mae())
                      << " mean_l2=" << format_double(agg.mean_l2())
                      << " mean_analytic_l2=" << format_double(agg.mean_analytic())
                      << " mean_comm_bytes=" << format_double(agg.mean_bytes())
                      << " vertex_ms=" << format_double(agg.vertex_ns / 1e6)
                      << " curator_ms=" << format_double(agg.curator_ns / 1e6) << '\n';
    }
  });
}

int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate_format(config);
    const BipartiteGraph g = load_edge_list(config.graph_path);
    const std::vector<PairContext> pairs = sampled_contexts(g, config);
    const std::vector<double> epsilons = effective_epsilons(config, true);

    const BenchResult result = bench_core(g, pairs, config, epsilons, true, nullptr, false);

    OutputTarget target(config, out);
    target.stream() << "algo,epsilon,eps1_fraction,pairs,trials_per_pair,mae,mean_l2,"
                       "mean_analytic_l2,mean_comm_bytes\n";
    for (const auto& [key, agg] : result.stats) {
      const auto& [name, eps, fraction] = key;
      target.stream() << name << ',' << format_double(eps) << ','
                      << (name == "ss" ? format_double(fraction) : std::string()) << ','
                      << pairs.size() << ',' << config.trials_per_pair << ','
                      << format_double(agg.mae()) << ',' << format_double(agg.mean_l2()) << ','
                      << format_double(agg.mean_analytic()) << ','
                      << format_double(agg.mean_bytes()) << '\n';
    }
  });
}

int run_distribution(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate_format(config);
    const BipartiteGraph g = load_edge_list(config.graph_path);
    const PairContext ctx = make_context(g, resolve_pair(g, config));

    OutputTarget target(config, out);
    emit_header(target.stream(), config.json);
    for (const Algorithm algo : effective_algos(config)) {
      for (const double eps : effective_epsilons(config, false)) {
        const std::uint64_t master = algo_master(config.seed, algo, eps);
        for (std::uint64_t t = 0; t < config.trials; ++t) {
          EstimatorOptions options;
          options.eps1_fraction = config.eps1_fractions.front();
          const RandomSource rng(master, t);
          const EstimateReport report = run_estimator(algo, g, ctx.q, eps, rng, options);
          emit_row(target.stream(), config.json, make_row(g, ctx, algo, eps, t, config.seed, report));
        }
      }
    }
  });
}

int run_gen_synthetic(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.out_path.empty()) throw ValidationError("gen-synthetic needs --out");
    const BipartiteGraph g = generate_synthetic(config.n1, config.n2, config.density, config.seed);
    write_edge_list(g, config.out_path);
    out << g.summary_json() << '\n';
  });
}

int run_graph_summary(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate_format(config);
    const BipartiteGraph g = load_edge_list(config.graph_path);
    OutputTarget target(config, out);
    target.stream() << g.summary_json() << '\n';
  });
}

}  // namespace cnldp
