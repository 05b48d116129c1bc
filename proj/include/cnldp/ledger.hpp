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

#include <vector>

namespace cnldp {

enum class Mechanism {
  RandomizedResponse,
  Laplace,         // local, at a vertex
  CentralLaplace,  // at the trusted curator; not an LDP spend
};

// How an entry composes with the other entries of its round: sequential
// spends add up; parallel spends act on disjoint inputs, so a round's
// parallel group costs only its maximum.
enum class Composition { Sequential, Parallel };

struct LedgerEntry {
  int round;
  Mechanism mechanism;
  double epsilon;
  Composition composition;
};

// Record of every privacy spend in one protocol execution. total() is the
// budget consumed end to end: per round, the sum of sequential entries plus
// the max over parallel entries; rounds then add sequentially.
class PrivacyLedger {
 public:
  void add(int round, Mechanism mechanism, double epsilon, Composition composition) {
    entries_.push_back({round, mechanism, epsilon, composition});
  }

  const std::vector<LedgerEntry>& entries() const { return entries_; }

  double total() const {
    double sum = 0.0;
    // Rounds are few and appended in order; scan per distinct round.
    std::vector<int> seen;
    for (const auto& e : entries_) {
      bool done = false;
      for (int r : seen) done = done || r == e.round;
      if (done) continue;
      seen.push_back(e.round);
      double seq = 0.0, par = 0.0;
      for (const auto& f : entries_) {
        if (f.round != e.round) continue;
        if (f.composition == Composition::Sequential) {
          seq += f.epsilon;
        } else if (f.epsilon > par) {
          par = f.epsilon;
        }
      }
      sum += seq + par;
    }
    return sum;
  }

 private:
  std::vector<LedgerEntry> entries_;
};

}  // namespace cnldp
