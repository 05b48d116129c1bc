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

#include "cnldp/mechanisms.hpp"

#include <algorithm>
#include <cmath>

#include "cnldp/errors.hpp"

namespace cnldp {

double validate_epsilon(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw ValidationError("epsilon must be positive and finite");
  }
  return eps;
}

double flip_probability(double eps) {
  validate_epsilon(eps);
  return 1.0 / (1.0 + std::exp(eps));
}

double rr_likelihood_ratio(double p) { return (1.0 - p) / p; }

double phi(bool bit, double p) { return ((bit ? 1.0 : 0.0) - p) / (1.0 - 2.0 * p); }

double phi_variance(double p) {
  const double q = 1.0 - 2.0 * p;
  return p * (1.0 - p) / (q * q);
}

double laplace_variance(double scale) { return 2.0 * scale * scale; }

double laplace_sample(double scale, RngStream& stream) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw ValidationError("Laplace scale must be positive and finite");
  }
  return stream.laplace(scale);
}

bool NoisyNeighborSet::contains(std::uint32_t index) const {
  return std::binary_search(members.begin(), members.end(), index);
}

NoisyNeighborSet randomized_response(const BipartiteGraph& g, VertexRef v, double eps,
                                     RngStream& stream) {
  validate_epsilon(eps);
  g.check_vertex(v);
  const double p = flip_probability(eps);
  const auto& nbrs = g.neighbors(v);
  const std::uint32_t n_opp = g.layer_size(opposite(v.layer));

  NoisyNeighborSet out{v, eps, p, {}};
  const double expect = nbrs.size() * (1.0 - p) + (n_opp - nbrs.size()) * p;
  out.members.reserve(static_cast<std::size_t>(expect * 1.1) + 16);

  // One draw per possible entry, in index order, so the stream's draw
  // positions do not depend on the adjacency.
  std::size_t k = 0;
  for (std::uint32_t j = 0; j < n_opp; ++j) {
    const bool edge = k < nbrs.size() && nbrs[k] == j;
    if (edge) ++k;
    const bool flip = stream.bernoulli(p);
    if (edge != flip) out.members.push_back(j);
  }
  return out;
}

}  // namespace cnldp
