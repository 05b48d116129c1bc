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
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cnldp/errors.hpp"
#include "cnldp/rng.hpp"

namespace cnldp {

enum class Layer : std::uint8_t { Upper = 0, Lower = 1 };

inline Layer opposite(Layer l) { return l == Layer::Upper ? Layer::Lower : Layer::Upper; }
inline const char* layer_name(Layer l) { return l == Layer::Upper ? "upper" : "lower"; }
std::optional<Layer> parse_layer(std::string_view s);

// A vertex named by layer and dense 0-based index within that layer.
struct VertexRef {
  Layer layer;
  std::uint32_t index;

  friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

// Two distinct query vertices on the same layer.
struct QueryPair {
  VertexRef u;
  VertexRef w;
};

// Stream-path slots. Real vertices occupy (layer << 32) | index; slots with
// the bit 2^33 set are reserved for draws not owned by one reporting vertex
// (degree-report batches, pair sampling, the central curator).
inline constexpr std::uint64_t stream_slot(Layer l, std::uint32_t index) {
  return (static_cast<std::uint64_t>(l) << 32) | index;
}
inline constexpr std::uint64_t reserved_slot(std::uint64_t id) { return (1ull << 33) | id; }

// Undirected bipartite graph with two vertex layers and edges only across
// layers. Adjacency is kept from both sides, sorted by internal index.
// External (file) ids are 1-based per layer and may be sparse; they are
// mapped to dense internal indices in order of first appearance, and the
// mapping is kept for reporting.
class BipartiteGraph {
 public:
  BipartiteGraph(std::uint32_t n_upper, std::uint32_t n_lower);

  // Builds from (upper external id, lower external id) pairs. Duplicate
  // edges collapse; ids must be positive. Internal indices follow ascending
  // external id, so the layout does not depend on edge order.
  static BipartiteGraph from_external_edges(
      const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges);

  // Builds from internal (upper index, lower index) pairs over fixed layer
  // sizes; external ids default to index + 1. Duplicate edges collapse.
  static BipartiteGraph from_internal_edges(
      std::uint32_t n_upper, std::uint32_t n_lower,
      const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

  std::uint32_t layer_size(Layer l) const {
    return l == Layer::Upper ? n_upper_ : n_lower_;
  }
  std::uint64_t edge_count() const { return m_; }

  // Sorted opposite-layer indices.
  const std::vector<std::uint32_t>& neighbors(VertexRef v) const;
  std::uint32_t degree(VertexRef v) const;
  std::uint32_t max_degree(Layer l) const;

  std::uint64_t external_id(VertexRef v) const;
  std::optional<std::uint32_t> internal_index(Layer l, std::uint64_t external_id) const;

  // Throws ValidationError unless v names a vertex of this graph.
  void check_vertex(VertexRef v) const;
  // Throws ValidationError unless both endpoints are valid, distinct, and on
  // the same layer.
  void check_pair(const QueryPair& q) const;

  // {"n1":..., "n2":..., "m":..., "max_deg_upper":..., "max_deg_lower":...}
  std::string summary_json() const;

 private:
  friend BipartiteGraph load_edge_list(const std::string&);
  friend BipartiteGraph generate_synthetic(std::uint32_t, std::uint32_t, double, std::uint64_t);

  void add_edge_internal(std::uint32_t ui, std::uint32_t li);
  void sort_and_dedupe();

  std::uint32_t n_upper_ = 0;
  std::uint32_t n_lower_ = 0;
  std::uint64_t m_ = 0;
  std::vector<std::vector<std::uint32_t>> upper_adj_;  // upper index -> lower indices
  std::vector<std::vector<std::uint32_t>> lower_adj_;  // lower index -> upper indices
  std::vector<std::uint64_t> upper_ext_;               // internal -> external
  std::vector<std::uint64_t> lower_ext_;
  std::unordered_map<std::uint64_t, std::uint32_t> upper_int_;  // external -> internal
  std::unordered_map<std::uint64_t, std::uint32_t> lower_int_;
};

// Reads a whitespace-separated edge list: lines starting with '%' or '#' are
// comments, each data line is "<upper id> <lower id> [ignored...]" with
// 1-based ids in separate per-layer id spaces. Duplicate edges collapse.
// Throws ParseError (malformed line) or ValidationError (bad id, no edges).
BipartiteGraph load_edge_list(const std::string& path);

// Writes the graph back in the same format (one "% bip" comment header,
// then "<upper id> <lower id>" per edge). Reloading the result reproduces
// the adjacency structure and external ids exactly.
void write_edge_list(const BipartiteGraph& g, const std::string& path);

// Random bipartite graph: each of the n_upper * n_lower possible edges is
// present independently with probability `density`. Pure function of its
// arguments. External ids are index + 1.
BipartiteGraph generate_synthetic(std::uint32_t n_upper, std::uint32_t n_lower,
                                  double density, std::uint64_t seed);

// |N(u) ∩ N(w)| over the true adjacency.
std::uint64_t exact_common_neighbors(const BipartiteGraph& g, const QueryPair& q);

// Samples `count` distinct unordered same-layer pairs uniformly, by
// rejection. With `kappa` set, only pairs whose degrees satisfy
// max > kappa * min are accepted. Gives up after 1e6 candidate draws and
// throws InfeasibleSamplingError reporting how many pairs were found.
std::vector<QueryPair> sample_query_pairs(const BipartiteGraph& g, Layer layer,
                                          std::size_t count, std::optional<double> kappa,
                                          std::uint64_t seed);

}  // namespace cnldp
