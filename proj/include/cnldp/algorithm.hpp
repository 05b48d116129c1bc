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

#include <optional>
#include <string>
#include <string_view>

namespace cnldp {

// The five common-neighbor estimators. The first four run under edge local
// DP; Central is a trusted-curator baseline and is not an LDP protocol.
enum class Algorithm {
  Naive,         // one round, intersection of two randomized-response rows
  OneR,          // one round, bias-corrected transform of the same rows
  SingleSource,  // two rounds, one perturbed source plus a Laplace-protected count
  DoubleSource,  // three rounds, degree calibration and two weighted sources
  Central,       // exact count plus Laplace noise at a trusted curator
};

inline const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Naive: return "naive";
    case Algorithm::OneR: return "oner";
    case Algorithm::SingleSource: return "ss";
    case Algorithm::DoubleSource: return "ds";
    case Algorithm::Central: return "central";
  }
  return "?";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view s) {
  if (s == "naive") return Algorithm::Naive;
  if (s == "oner") return Algorithm::OneR;
  if (s == "ss") return Algorithm::SingleSource;
  if (s == "ds") return Algorithm::DoubleSource;
  if (s == "central") return Algorithm::Central;
  return std::nullopt;
}

}  // namespace cnldp
