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
#include <vector>

#include "cnldp/graph.hpp"
#include "cnldp/rng.hpp"

namespace cnldp {

// Returns eps unchanged if it is a usable privacy budget (> 0 and finite),
// else throws ValidationError.
double validate_epsilon(double eps);

// Per-entry flip probability of randomized response at budget eps:
// p = 1 / (1 + e^eps). Lies in (0, 1/2) for every positive eps.
double flip_probability(double eps);

// Likelihood ratio (1 - p) / p of one released entry between the two
// possible true values; equals e^eps for p = flip_probability(eps).
double rr_likelihood_ratio(double p);

// Unbiased single-entry inverter for a bit released under flip probability
// p: phi(b) = (b - p) / (1 - 2p). E[phi] recovers the true bit.
double phi(bool bit, double p);

// Var[phi] = p (1 - p) / (1 - 2p)^2, independent of the true bit.
double phi_variance(double p);

// Var of a centered Laplace draw with the given scale: 2 * scale^2.
double laplace_variance(double scale);

// One centered Laplace draw. scale must be positive and finite.
double laplace_sample(double scale, RngStream& stream);

// One vertex's perturbed opposite-layer row: every possible entry flipped
// independently with probability flip_prob. This is all a vertex ever
// releases about its neighbor list.
struct NoisyNeighborSet {
  VertexRef source;
  double epsilon;
  double flip_prob;
  std::vector<std::uint32_t> members;  // sorted opposite-layer indices

  bool contains(std::uint32_t index) const;
};

// Applies randomized response to v's row at budget eps, drawing one
// Bernoulli per opposite-layer entry from `stream` in index order. Same
// (graph, vertex, eps, stream path) replays bit-identically.
NoisyNeighborSet randomized_response(const BipartiteGraph& g, VertexRef v, double eps,
                                     RngStream& stream);

}  // namespace cnldp
