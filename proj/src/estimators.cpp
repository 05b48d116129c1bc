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

#include "cnldp/estimators.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "cnldp/errors.hpp"

namespace cnldp {

namespace {

constexpr double kDegreeRoundShare = 0.05;  // slice of eps bought for the degree round

constexpr std::uint64_t kCuratorSlot = reserved_slot(2);
// One batched stream per degree round; draws happen in vertex-index order.
constexpr std::uint64_t degree_round_slot(Layer l) {
  return reserved_slot(4 | static_cast<std::uint64_t>(l));
}

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ns(Clock::time_point from, Clock::time_point to) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(to - from).count());
}

void note(Transcript* out, Transcript& local, const Message& m) {
  local.record(m);
  if (out) out->record(m);
}

}  // namespace

namespace curator {

std::uint64_t intersection_size(const NoisyNeighborSet& a, const NoisyNeighborSet& b) {
  std::uint64_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.members.size() && j < b.members.size()) {
    if (a.members[i] < b.members[j]) {
      ++i;
    } else if (b.members[j] < a.members[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::uint64_t union_size(const NoisyNeighborSet& a, const NoisyNeighborSet& b) {
  return a.members.size() + b.members.size() - intersection_size(a, b);
}

double naive_value(const NoisyNeighborSet& a, const NoisyNeighborSet& b) {
  return static_cast<double>(intersection_size(a, b));
}

double oner_value(const NoisyNeighborSet& a, const NoisyNeighborSet& b,
                  std::uint32_t n_opposite) {
  if (a.flip_prob != b.flip_prob) {
    throw ValidationError("rows must be released at one flip probability");
  }
  const double p = a.flip_prob;
  const double q = 1.0 - 2.0 * p;
  const double n_cap = static_cast<double>(intersection_size(a, b));
  const double n_cup = static_cast<double>(union_size(a, b));
  return (n_cap * (1.0 - p) * (1.0 - p) - (n_cup - n_cap) * (1.0 - p) * p +
          (n_opposite - n_cup) * p * p) /
         (q * q);
}

}  // namespace curator

double source_side_value(const std::vector<std::uint32_t>& true_neighbors,
                         const NoisyNeighborSet& release) {
  const double p = release.flip_prob;
  const double q = 1.0 - 2.0 * p;
  std::uint64_t s1 = 0;
  // Both lists are sorted; count the matches.
  std::size_t i = 0, j = 0;
  while (i < true_neighbors.size() && j < release.members.size()) {
    if (true_neighbors[i] < release.members[j]) {
      ++i;
    } else if (release.members[j] < true_neighbors[i]) {
      ++j;
    } else {
      ++s1;
      ++i;
      ++j;
    }
  }
  const double s2 = static_cast<double>(true_neighbors.size() - s1);
  return static_cast<double>(s1) * (1.0 - p) / q - s2 * p / q;
}

double source_release_scale(double p, double eps2) {
  validate_epsilon(eps2);
  return (1.0 - p) / ((1.0 - 2.0 * p) * eps2);
}

DeviationBound chebyshev_bound(double variance, double k) {
  if (!(variance >= 0.0)) throw ValidationError("variance must be non-negative");
  if (!(k > 0.0)) throw ValidationError("k must be positive");
  return {k * std::sqrt(variance), 1.0 / (k * k)};
}

EstimateReport naive_estimate(const BipartiteGraph& g, const QueryPair& q, double eps,
                              const RandomSource& rng, Transcript* transcript) {
  g.check_pair(q);
  validate_epsilon(eps);
  EstimateReport report;
  report.algorithm = Algorithm::Naive;
  Transcript local;

  const auto v0 = Clock::now();
  RngStream su = rng.stream(stream_slot(q.u.layer, q.u.index), 1);
  RngStream sw = rng.stream(stream_slot(q.w.layer, q.w.index), 1);
  const NoisyNeighborSet ru = randomized_response(g, q.u, eps, su);
  const NoisyNeighborSet rw = randomized_response(g, q.w, eps, sw);
  const auto v1 = Clock::now();

  note(transcript, local,
       {1, Direction::VertexToCurator, MessageKind::NoisyEdges, kBytesPerEdge * ru.members.size()});
  note(transcript, local,
       {1, Direction::VertexToCurator, MessageKind::NoisyEdges, kBytesPerEdge * rw.members.size()});
  report.ledger.add(1, Mechanism::RandomizedResponse, eps, Composition::Parallel);
  report.ledger.add(1, Mechanism::RandomizedResponse, eps, Composition::Parallel);

  const auto c0 = Clock::now();
  report.value = curator::naive_value(ru, rw);
  const auto c1 = Clock::now();

  report.comm_bytes = local.total_bytes();
  report.rounds = 1;
  report.vertex_ns = elapsed_ns(v0, v1);
  report.curator_ns = elapsed_ns(c0, c1);
  return report;
}

EstimateReport oner_estimate(const BipartiteGraph& g, const QueryPair& q, double eps,
                             const RandomSource& rng, Transcript* transcript) {
  g.check_pair(q);
  validate_epsilon(eps);
  EstimateReport report;
  report.algorithm = Algorithm::OneR;
  Transcript local;

  const auto v0 = Clock::now();
  RngStream su = rng.stream(stream_slot(q.u.layer, q.u.index), 1);
  RngStream sw = rng.stream(stream_slot(q.w.layer, q.w.index), 1);
  const NoisyNeighborSet ru = randomized_response(g, q.u, eps, su);
  const NoisyNeighborSet rw = randomized_response(g, q.w, eps, sw);
  const auto v1 = Clock::now();

  note(transcript, local,
       {1, Direction::VertexToCurator, MessageKind::NoisyEdges, kBytesPerEdge * ru.members.size()});
  note(transcript, local,
       {1, Direction::VertexToCurator, MessageKind::NoisyEdges, kBytesPerEdge * rw.members.size()});
  report.ledger.add(1, Mechanism::RandomizedResponse, eps, Composition::Parallel);
  report.ledger.add(1, Mechanism::RandomizedResponse, eps, Composition::Parallel);

  const auto c0 = Clock::now();
  report.value = curator::oner_value(ru, rw, g.layer_size(opposite(q.u.layer)));
  const auto c1 = Clock::now();

  report.comm_bytes = local.total_bytes();
  report.rounds = 1;
  report.vertex_ns = elapsed_ns(v0, v1);
  report.curator_ns = elapsed_ns(c0, c1);
  return report;
}

EstimateReport single_source_estimate(const BipartiteGraph& g, const QueryPair& q, double eps,
                                      const RandomSource& rng, double eps1_fraction,
                                      Transcript* transcript) {
  g.check_pair(q);
  validate_epsilon(eps);
  if (!(eps1_fraction > 0.0 && eps1_fraction < 1.0)) {
    throw ValidationError("eps1_fraction must lie strictly between 0 and 1");
  }
  const double eps1 = eps1_fraction * eps;
  const double eps2 = eps - eps1;

  EstimateReport report;
  report.algorithm = Algorithm::SingleSource;
  Transcript local;

  // Round 1: only w perturbs; u keeps its true list local.
  const auto v0 = Clock::now();
  RngStream sw = rng.stream(stream_slot(q.w.layer, q.w.index), 1);
  const NoisyNeighborSet rw = randomized_response(g, q.w, eps1, sw);
  note(transcript, local,
       {1, Direction::VertexToCurator, MessageKind::NoisyEdges, kBytesPerEdge * rw.members.size()});
  report.ledger.add(1, Mechanism::RandomizedResponse, eps1, Composition::Sequential);

  // Round 2: u scans its own neighbors against the release and adds Laplace
  // noise scaled to the one-bit sensitivity of that scan.
  const double scale = source_release_scale(rw.flip_prob, eps2);
  RngStream su = rng.stream(stream_slot(q.u.layer, q.u.index), 2);
  report.value = source_side_value(g.neighbors(q.u), rw) + laplace_sample(scale, su);
  const auto v1 = Clock::now();

  note(transcript, local, {2, Direction::VertexToCurator, MessageKind::EstimatorReport,
                           kBytesPerScalar});
  report.ledger.add(2, Mechanism::Laplace, eps2, Composition::Sequential);

  report.comm_bytes = local.total_bytes();
  report.rounds = 2;
  report.plan = BudgetPlan{0.0, eps1, eps2, 1.0};
  report.vertex_ns = elapsed_ns(v0, v1);
  return report;
}

EstimateReport double_source_estimate(const BipartiteGraph& g, const QueryPair& q, double eps,
                                      const RandomSource& rng, const RandomSource* round1_rng,
                                      Transcript* transcript) {
  g.check_pair(q);
  validate_epsilon(eps);
  const Layer layer = q.u.layer;
  const std::uint32_t n_query = g.layer_size(layer);
  const double eps0 = kDegreeRoundShare * eps;

  EstimateReport report;
  report.algorithm = Algorithm::DoubleSource;
  Transcript local;

  // Round 1: every query-layer vertex reports its degree plus Laplace(1/eps0).
  // Disjoint lists, so the round composes in parallel at eps0.
  const auto v0 = Clock::now();
  const RandomSource& r1 = round1_rng ? *round1_rng : rng;
  RngStream degree_stream = r1.stream(degree_round_slot(layer), 1);
  double sum = 0.0;
  double noisy_du = 0.0, noisy_dw = 0.0;
  for (std::uint32_t i = 0; i < n_query; ++i) {
    const double noisy =
        g.degree({layer, i}) + laplace_sample(1.0 / eps0, degree_stream);
    sum += noisy;
    if (i == q.u.index) noisy_du = noisy;
    if (i == q.w.index) noisy_dw = noisy;
  }
  const auto v1 = Clock::now();
  note(transcript, local, {1, Direction::VertexToCurator, MessageKind::DegreeReport,
                           kBytesPerScalar * n_query});
  report.ledger.add(1, Mechanism::Laplace, eps0, Composition::Parallel);

  // Curator: non-positive reports are replaced by the layer mean, and both
  // working degrees are clamped to at least 1 before planning.
  const auto c0 = Clock::now();
  const double mean_degree = sum / n_query;
  double du = noisy_du <= 0.0 ? mean_degree : noisy_du;
  double dw = noisy_dw <= 0.0 ? mean_degree : noisy_dw;
  du = std::fmax(1.0, du);
  dw = std::fmax(1.0, dw);
  bool fell_back = false;
  const BudgetPlan plan = plan_or_fallback(du, dw, eps, eps0, &fell_back);
  const auto c1 = Clock::now();

  // Round 2: both query vertices perturb their rows at eps1 (parallel).
  const auto v2 = Clock::now();
  RngStream su = rng.stream(stream_slot(q.u.layer, q.u.index), 2);
  RngStream sw = rng.stream(stream_slot(q.w.layer, q.w.index), 2);
  const NoisyNeighborSet ru = randomized_response(g, q.u, plan.eps1, su);
  const NoisyNeighborSet rw = randomized_response(g, q.w, plan.eps1, sw);
  note(transcript, local,
       {2, Direction::VertexToCurator, MessageKind::NoisyEdges, kBytesPerEdge * ru.members.size()});
  note(transcript, local,
       {2, Direction::VertexToCurator, MessageKind::NoisyEdges, kBytesPerEdge * rw.members.size()});
  report.ledger.add(2, Mechanism::RandomizedResponse, plan.eps1, Composition::Parallel);
  report.ledger.add(2, Mechanism::RandomizedResponse, plan.eps1, Composition::Parallel);

  // Round 3: each side scans its true list against the other's release and
  // adds Laplace noise at eps2; the two releases touch disjoint lists.
  const double scale = source_release_scale(ru.flip_prob, plan.eps2);
  RngStream nu = rng.stream(stream_slot(q.u.layer, q.u.index), 3);
  RngStream nw = rng.stream(stream_slot(q.w.layer, q.w.index), 3);
  const double fu = source_side_value(g.neighbors(q.u), rw) + laplace_sample(scale, nu);
  const double fw = source_side_value(g.neighbors(q.w), ru) + laplace_sample(scale, nw);
  const auto v3 = Clock::now();
  note(transcript, local, {3, Direction::VertexToCurator, MessageKind::EstimatorReport,
                           kBytesPerScalar});
  note(transcript, local, {3, Direction::VertexToCurator, MessageKind::EstimatorReport,
                           kBytesPerScalar});
  report.ledger.add(3, Mechanism::Laplace, plan.eps2, Composition::Parallel);
  report.ledger.add(3, Mechanism::Laplace, plan.eps2, Composition::Parallel);

  const auto c2 = Clock::now();
  report.value = plan.alpha * fu + (1.0 - plan.alpha) * fw;
  const auto c3 = Clock::now();

  report.comm_bytes = local.total_bytes();
  report.rounds = 3;
  report.plan = plan;
  report.plan_fallback = fell_back;
  report.vertex_ns = elapsed_ns(v0, v1) + elapsed_ns(v2, v3);
  report.curator_ns = elapsed_ns(c0, c1) + elapsed_ns(c2, c3);
  return report;
}

EstimateReport central_estimate(const BipartiteGraph& g, const QueryPair& q, double eps,
                                const RandomSource& rng, Transcript* transcript) {
  (void)transcript;  // nothing crosses the wire
  g.check_pair(q);
  validate_epsilon(eps);
  EstimateReport report;
  report.algorithm = Algorithm::Central;

  const auto c0 = Clock::now();
  RngStream noise = rng.stream(kCuratorSlot, 1);
  report.value =
      static_cast<double>(exact_common_neighbors(g, q)) + laplace_sample(1.0 / eps, noise);
  const auto c1 = Clock::now();

  report.ledger.add(1, Mechanism::CentralLaplace, eps, Composition::Sequential);
  report.comm_bytes = 0;
  report.rounds = 0;
  report.curator_ns = elapsed_ns(c0, c1);
  return report;
}

EstimateReport run_estimator(Algorithm algo, const BipartiteGraph& g, const QueryPair& q,
                             double eps, const RandomSource& rng,
                             const EstimatorOptions& options) {
  switch (algo) {
    case Algorithm::Naive:
      return naive_estimate(g, q, eps, rng, options.transcript);
    case Algorithm::OneR:
      return oner_estimate(g, q, eps, rng, options.transcript);
    case Algorithm::SingleSource:
      return single_source_estimate(g, q, eps, rng, options.eps1_fraction, options.transcript);
    case Algorithm::DoubleSource:
      return double_source_estimate(g, q, eps, rng, options.round1_rng, options.transcript);
    case Algorithm::Central:
      return central_estimate(g, q, eps, rng, options.transcript);
  }
  throw ValidationError("unknown algorithm");
}

}  // namespace cnldp
