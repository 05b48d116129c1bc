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
#include <string>
#include <vector>

#include "cnldp/algorithm.hpp"
#include "cnldp/budget.hpp"

namespace cnldp {

enum class Direction { VertexToCurator, CuratorToVertex };

enum class MessageKind {
  NoisyEdges,          // one vertex's perturbed row
  DegreeReport,        // noisy degree scalars
  EstimatorReport,     // one locally computed estimate
  NoisyGraphDownload,  // perturbed rows relayed back out by the curator
};

const char* direction_name(Direction d);
const char* message_kind_name(MessageKind k);

// Fixed size model: every edge and every scalar costs 8 bytes on the wire.
inline constexpr std::uint64_t kBytesPerEdge = 8;
inline constexpr std::uint64_t kBytesPerScalar = 8;

struct Message {
  int round;
  Direction direction;
  MessageKind kind;
  std::uint64_t payload_bytes;
};

// Ordered log of everything that crossed the wire in one protocol run.
// Each transfer is charged once, on the leg whose recipient consumes it.
class Transcript {
 public:
  // Messages must arrive in round order; a lower round than one already
  // recorded throws ProtocolOrderError.
  void record(const Message& message);

  std::uint64_t total_bytes() const { return total_bytes_; }
  int last_round() const { return last_round_; }
  const std::vector<Message>& messages() const { return messages_; }

  // One {"round":..,"direction":..,"kind":..,"bytes":..} object per line.
  std::string to_json_lines() const;

 private:
  std::vector<Message> messages_;
  std::uint64_t total_bytes_ = 0;
  int last_round_ = 0;
};

// Expected on-the-wire bytes of one run, as a function of the endpoint
// degrees, the opposite-layer size n1, and the query-layer size n2. The
// multi-round algorithms need the realized plan for their flip probability.
// The central baseline sends nothing.
double expected_comm_bytes(Algorithm algo, double d_u, double d_w, double n1, double n2,
                           double eps, const std::optional<BudgetPlan>& plan = std::nullopt);

// Protocol round count per algorithm: 1, 1, 2, 3, and 0 for central.
int round_count(Algorithm algo);

}  // namespace cnldp
