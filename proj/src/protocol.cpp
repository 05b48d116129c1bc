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

#include "cnldp/protocol.hpp"

#include <sstream>

#include "cnldp/errors.hpp"
#include "cnldp/mechanisms.hpp"

namespace cnldp {

const char* direction_name(Direction d) {
  return d == Direction::VertexToCurator ? "vertex_to_curator" : "curator_to_vertex";
}

const char* message_kind_name(MessageKind k) {
  switch (k) {
    case MessageKind::NoisyEdges: return "noisy_edges";
    case MessageKind::DegreeReport: return "degree_report";
    case MessageKind::EstimatorReport: return "estimator_report";
    case MessageKind::NoisyGraphDownload: return "noisy_graph_download";
  }
  return "?";
}

void Transcript::record(const Message& message) {
  if (message.round < last_round_) {
    throw ProtocolOrderError("message for round " + std::to_string(message.round) +
                             " after round " + std::to_string(last_round_));
  }
  last_round_ = message.round;
  total_bytes_ += message.payload_bytes;
  messages_.push_back(message);
}

std::string Transcript::to_json_lines() const {
  std::ostringstream os;
  for (const auto& m : messages_) {
    os << "{\"round\":" << m.round << ",\"direction\":\"" << direction_name(m.direction)
       << "\",\"kind\":\"" << message_kind_name(m.kind) << "\",\"bytes\":" << m.payload_bytes
       << "}\n";
  }
  return os.str();
}

double expected_comm_bytes(Algorithm algo, double d_u, double d_w, double n1, double n2,
                           double eps, const std::optional<BudgetPlan>& plan) {
  switch (algo) {
    case Algorithm::Naive:
    case Algorithm::OneR: {
      const double p = flip_probability(eps);
      return kBytesPerEdge * ((d_u + d_w) * (1.0 - p) + (2.0 * n1 - d_u - d_w) * p);
    }
    case Algorithm::SingleSource: {
      if (!plan) throw ValidationError("expected bytes for the two-round algorithm need its plan");
      const double p = flip_probability(plan->eps1);
      return kBytesPerEdge * (d_w * (1.0 - p) + (n1 - d_w) * p) + kBytesPerScalar;
    }
    case Algorithm::DoubleSource: {
      if (!plan) throw ValidationError("expected bytes for the three-round algorithm need its plan");
      const double p = flip_probability(plan->eps1);
      // n2 degree scalars (the query vertices' own reports are among them),
      // both perturbed rows, and two estimator scalars.
      return kBytesPerScalar * n2 +
             kBytesPerEdge * ((d_u + d_w) * (1.0 - p) + (2.0 * n1 - d_u - d_w) * p) +
             2.0 * kBytesPerScalar;
    }
    case Algorithm::Central:
      return 0.0;
  }
  throw ValidationError("unknown algorithm");
}

int round_count(Algorithm algo) {
  switch (algo) {
    case Algorithm::Naive:
    case Algorithm::OneR:
      return 1;
    case Algorithm::SingleSource:
      return 2;
    case Algorithm::DoubleSource:
      return 3;
    case Algorithm::Central:
      return 0;
  }
  throw ValidationError("unknown algorithm");
}

}  // namespace cnldp
