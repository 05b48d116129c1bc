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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cnldp {

// Caller handed us something that violates a documented precondition:
// non-positive epsilon, out-of-range vertex, u == w, and so on.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or malformed graph file. line() is 1-based, or -1 when the
// failure is not tied to a specific line.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, long line = -1)
      : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}

  long line() const { return line_; }

 private:
  long line_;
};

// Pair sampling hit its attempt cap before finding enough admissible pairs.
class InfeasibleSamplingError : public std::runtime_error {
 public:
  InfeasibleSamplingError(const std::string& what, std::size_t found, std::size_t requested)
      : std::runtime_error(what), found_(found), requested_(requested) {}

  std::size_t found() const { return found_; }
  std::size_t requested() const { return requested_; }

 private:
  std::size_t found_;
  std::size_t requested_;
};

// A message was appended to a transcript with a round index lower than one
// already recorded.
class ProtocolOrderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cnldp
