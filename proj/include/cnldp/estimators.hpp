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
#include <optional>

#include "cnldp/algorithm.hpp"
#include "cnldp/budget.hpp"
#include "cnldp/graph.hpp"
#include "cnldp/ledger.hpp"
#include "cnldp/mechanisms.hpp"
#include "cnldp/protocol.hpp"
#include "cnldp/rng.hpp"

namespace cnldp {

// Everything one protocol run reports back: the estimate itself (left
// un-clamped and un-rounded so repetitions stay unbiased), the privacy
// spends, the bytes that crossed the wire, and the realized budget plan for
// the multi-round algorithms.
struct EstimateReport {
  Algorithm algorithm;
  double value = 0.0;
  PrivacyLedger ledger;
  std::uint64_t comm_bytes = 0;
  int rounds = 0;
  std::optional<BudgetPlan> plan;
  bool plan_fallback = false;  // the three-round planner degraded to the even split
  std::uint64_t vertex_ns = 0;   // wall time spent simulating vertex-side work
  std::uint64_t curator_ns = 0;  // wall time spent simulating curator-side work
};

// Curator-side combiners. They accept released data, never the graph, so
// curator code cannot touch true adjacency by construction.
namespace curator {

std::uint64_t intersection_size(const NoisyNeighborSet& a, const NoisyNeighborSet& b);
std::uint64_t union_size(const NoisyNeighborSet& a, const NoisyNeighborSet& b);

// The raw intersection, taken at face value.
double naive_value(const NoisyNeighborSet& a, const NoisyNeighborSet& b);

// Bias-corrected combination of two rows released at the same flip
// probability, over an opposite layer of n_opposite vertices. Expanding the
// per-entry inverter product over intersection / symmetric difference /
// absentees needs only the two set sizes:
//   n∩ (1-p)^2 - (n∪ - n∩) (1-p) p + (n_opposite - n∪) p^2, all over (1-2p)^2.
double oner_value(const NoisyNeighborSet& a, const NoisyNeighborSet& b, std::uint32_t n_opposite);

}  // namespace curator

// Source-side core of the multi-round algorithms: the owner of
// `true_neighbors` scans its own list against a released row and inverts
// each membership bit, giving sum phi = s1 (1-p)/(1-2p) - s2 p/(1-2p) with
// s1 matches and s2 = d - s1 misses.
double source_side_value(const std::vector<std::uint32_t>& true_neighbors,
                         const NoisyNeighborSet& release);

// Scale of the Laplace noise protecting a source-side release: one
// neighbor-list bit moves the value by at most (1-p)/(1-2p), and that
// sensitivity is bought with eps2.
double source_release_scale(double p, double eps2);

// Chebyshev deviation bound at k standard-deviation units: radius
// k * sqrt(variance), exceeded with probability at most 1/k^2.
struct DeviationBound {
  double radius;
  double probability_bound;
};
DeviationBound chebyshev_bound(double variance, double k);

// The five estimators. Each validates its inputs, runs the full protocol
// against `rng`'s streams, and fills an EstimateReport. When `transcript`
// is non-null the run's messages are appended to it.

// One round: both query vertices release perturbed rows at eps (parallel
// spend); the curator intersects them. Biased upward on sparse graphs.
EstimateReport naive_estimate(const BipartiteGraph& g, const QueryPair& q, double eps,
                              const RandomSource& rng, Transcript* transcript = nullptr);

// One round: same releases, bias-corrected combination. Unbiased.
EstimateReport oner_estimate(const BipartiteGraph& g, const QueryPair& q, double eps,
                             const RandomSource& rng, Transcript* transcript = nullptr);

// Two rounds: w releases a perturbed row at eps1 = eps1_fraction * eps; u
// scans its true list against it and releases the inverted count under
// Laplace noise at eps2 = eps - eps1. Spends compose sequentially.
EstimateReport single_source_estimate(const BipartiteGraph& g, const QueryPair& q, double eps,
                                      const RandomSource& rng, double eps1_fraction = 0.5,
                                      Transcript* transcript = nullptr);

// Three rounds: every query-layer vertex reports a noisy degree at
// eps0 = 0.05 eps; the curator calibrates the pair's degrees and picks
// (eps1, alpha); both query vertices release perturbed rows at eps1; each
// side then releases its inverted count at eps2, and the curator combines
// them with weight alpha. Passing `round1_rng` replays the degree round
// (and hence the plan) from that source instead of `rng`.
EstimateReport double_source_estimate(const BipartiteGraph& g, const QueryPair& q, double eps,
                                      const RandomSource& rng,
                                      const RandomSource* round1_rng = nullptr,
                                      Transcript* transcript = nullptr);

// Trusted-curator baseline: exact count plus Laplace(1/eps). Not an LDP
// protocol; reported under the central tag.
EstimateReport central_estimate(const BipartiteGraph& g, const QueryPair& q, double eps,
                                const RandomSource& rng, Transcript* transcript = nullptr);

struct EstimatorOptions {
  double eps1_fraction = 0.5;             // two-round split
  const RandomSource* round1_rng = nullptr;  // pin the three-round degree round
  Transcript* transcript = nullptr;
};

EstimateReport run_estimator(Algorithm algo, const BipartiteGraph& g, const QueryPair& q,
                             double eps, const RandomSource& rng,
                             const EstimatorOptions& options = {});

}  // namespace cnldp
