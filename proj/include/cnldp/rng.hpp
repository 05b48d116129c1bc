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

#include <cmath>
#include <cstdint>

namespace cnldp {

// One reproducible random stream. The step is a Weyl increment followed by
// the splitmix64 finalizer, so a stream is fully determined by its seed and
// every draw is O(1) with no warm-up state.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1) with 53-bit resolution.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on the open interval (0, 1); never hits an endpoint.
  double next_open_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return next_unit() < p; }

  // Draw an index in [0, n). n must be positive.
  std::uint64_t next_index(std::uint64_t n) { return next_u64() % n; }

  // Centered Laplace draw with the given scale, via inverse-transform
  // sampling; the uniform is kept strictly inside (-1/2, 1/2) so the log
  // never sees zero.
  double laplace(double scale) { return laplace_from_unit(next_open_unit() - 0.5, scale); }

  // The inverse transform itself: u in (-1/2, 1/2), u == 0 maps to 0.
  static double laplace_from_unit(double u, double scale) {
    if (u == 0.0) return 0.0;
    const double sign = u > 0.0 ? 1.0 : -1.0;
    return -scale * sign * std::log(1.0 - 2.0 * std::fabs(u));
  }

 private:
  std::uint64_t state_;
};

// Hands out independent streams addressed by (master seed, trial, vertex
// slot, round). Equal addresses replay bit-identical sequences; distinct
// addresses give statistically independent sequences. Protocol code derives
// one stream per reporting vertex per round, so simulated parties never
// share randomness.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t master_seed, std::uint64_t trial = 0)
      : master_(master_seed), trial_(trial) {}

  std::uint64_t master_seed() const { return master_; }
  std::uint64_t trial() const { return trial_; }

  RandomSource for_trial(std::uint64_t trial) const { return RandomSource(master_, trial); }

  RngStream stream(std::uint64_t vertex_slot, std::uint64_t round) const {
    std::uint64_t s = mix(master_ ^ 0x243f6a8885a308d3ull, trial_);
    s = mix(s, vertex_slot);
    s = mix(s, round);
    return RngStream(s);
  }

  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t master_;
  std::uint64_t trial_;
};

}  // namespace cnldp
