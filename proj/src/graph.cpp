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

#include "cnldp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace cnldp {

namespace {

constexpr std::size_t kMaxSampleAttempts = 1000000;
constexpr std::uint64_t kSamplerSlot = reserved_slot(1);

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Parses the first two integer tokens of a data line; trailing columns
// (weights, timestamps) are ignored without being parsed.
bool first_two_tokens(std::string_view line, std::string_view& a, std::string_view& b) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < line.size() && is_space(line[i])) ++i;
  };
  auto take = [&]() -> std::string_view {
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    return line.substr(start, i - start);
  };
  skip_ws();
  if (i == line.size()) return false;
  a = take();
  skip_ws();
  if (i == line.size()) return false;
  b = take();
  return true;
}

std::uint64_t parse_id(std::string_view tok, long line_no) {
  std::uint64_t value = 0;
  const char* begin = tok.data();
  const char* end = begin + tok.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("expected an integer vertex id, got '" + std::string(tok) + "'", line_no);
  }
  if (value == 0) {
    throw ValidationError("vertex ids are 1-based; got 0 at line " + std::to_string(line_no));
  }
  return value;
}

}  // namespace

std::optional<Layer> parse_layer(std::string_view s) {
  if (s == "upper") return Layer::Upper;
  if (s == "lower") return Layer::Lower;
  return std::nullopt;
}

BipartiteGraph::BipartiteGraph(std::uint32_t n_upper, std::uint32_t n_lower)
    : n_upper_(n_upper),
      n_lower_(n_lower),
      upper_adj_(n_upper),
      lower_adj_(n_lower),
      upper_ext_(n_upper),
      lower_ext_(n_lower) {
  for (std::uint32_t i = 0; i < n_upper; ++i) {
    upper_ext_[i] = i + 1;
    upper_int_.emplace(i + 1, i);
  }
  for (std::uint32_t i = 0; i < n_lower; ++i) {
    lower_ext_[i] = i + 1;
    lower_int_.emplace(i + 1, i);
  }
}

BipartiteGraph BipartiteGraph::from_external_edges(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
  // Internal indices follow ascending external id, not first appearance, so
  // the dense layout is a function of the edge *set* alone and a written
  // file reloads to the identical graph.
  std::vector<std::uint64_t> uppers, lowers;
  uppers.reserve(edges.size());
  lowers.reserve(edges.size());
  for (const auto& [ue, le] : edges) {
    if (ue == 0 || le == 0) throw ValidationError("vertex ids are 1-based; got 0");
    uppers.push_back(ue);
    lowers.push_back(le);
  }
  auto dense = [](std::vector<std::uint64_t>& ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  };
  dense(uppers);
  dense(lowers);

  BipartiteGraph g(0, 0);
  g.n_upper_ = static_cast<std::uint32_t>(uppers.size());
  g.n_lower_ = static_cast<std::uint32_t>(lowers.size());
  g.upper_ext_ = std::move(uppers);
  g.lower_ext_ = std::move(lowers);
  g.upper_adj_.resize(g.n_upper_);
  g.lower_adj_.resize(g.n_lower_);
  for (std::uint32_t i = 0; i < g.n_upper_; ++i) g.upper_int_.emplace(g.upper_ext_[i], i);
  for (std::uint32_t i = 0; i < g.n_lower_; ++i) g.lower_int_.emplace(g.lower_ext_[i], i);
  for (const auto& [ue, le] : edges) {
    g.add_edge_internal(g.upper_int_.at(ue), g.lower_int_.at(le));
  }
  g.sort_and_dedupe();
  return g;
}

BipartiteGraph BipartiteGraph::from_internal_edges(
    std::uint32_t n_upper, std::uint32_t n_lower,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  BipartiteGraph g(n_upper, n_lower);
  for (const auto& [ui, li] : edges) {
    if (ui >= n_upper || li >= n_lower) throw ValidationError("edge endpoint out of range");
    g.add_edge_internal(ui, li);
  }
  g.sort_and_dedupe();
  return g;
}

void BipartiteGraph::add_edge_internal(std::uint32_t ui, std::uint32_t li) {
  upper_adj_[ui].push_back(li);
  lower_adj_[li].push_back(ui);
}

void BipartiteGraph::sort_and_dedupe() {
  m_ = 0;
  for (auto& nbrs : upper_adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    m_ += nbrs.size();
  }
  for (auto& nbrs : lower_adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
}

const std::vector<std::uint32_t>& BipartiteGraph::neighbors(VertexRef v) const {
  check_vertex(v);
  return v.layer == Layer::Upper ? upper_adj_[v.index] : lower_adj_[v.index];
}

std::uint32_t BipartiteGraph::degree(VertexRef v) const {
  return static_cast<std::uint32_t>(neighbors(v).size());
}

std::uint32_t BipartiteGraph::max_degree(Layer l) const {
  const auto& adj = l == Layer::Upper ? upper_adj_ : lower_adj_;
  std::size_t best = 0;
  for (const auto& nbrs : adj) best = std::max(best, nbrs.size());
  return static_cast<std::uint32_t>(best);
}

std::uint64_t BipartiteGraph::external_id(VertexRef v) const {
  check_vertex(v);
  return v.layer == Layer::Upper ? upper_ext_[v.index] : lower_ext_[v.index];
}

std::optional<std::uint32_t> BipartiteGraph::internal_index(Layer l,
                                                            std::uint64_t external_id) const {
  const auto& map = l == Layer::Upper ? upper_int_ : lower_int_;
  auto it = map.find(external_id);
  if (it == map.end()) return std::nullopt;
  return it->second;
}

void BipartiteGraph::check_vertex(VertexRef v) const {
  if (v.index >= layer_size(v.layer)) {
    throw ValidationError("vertex index " + std::to_string(v.index) + " out of range for " +
                          layer_name(v.layer) + " layer of size " +
                          std::to_string(layer_size(v.layer)));
  }
}

void BipartiteGraph::check_pair(const QueryPair& q) const {
  check_vertex(q.u);
  check_vertex(q.w);
  if (q.u.layer != q.w.layer) throw ValidationError("query vertices must share a layer");
  if (q.u.index == q.w.index) throw ValidationError("query vertices must be distinct");
}

std::string BipartiteGraph::summary_json() const {
  std::ostringstream os;
  os << "{\"n1\":" << n_upper_ << ",\"n2\":" << n_lower_ << ",\"m\":" << m_
     << ",\"max_deg_upper\":" << max_degree(Layer::Upper)
     << ",\"max_deg_lower\":" << max_degree(Layer::Lower) << "}";
  return os.str();
}

BipartiteGraph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");

  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = 0;
    while (start < line.size() && is_space(line[start])) ++start;
    if (start == line.size()) continue;  // blank
    if (line[start] == '%' || line[start] == '#') continue;

    std::string_view a, b;
    if (!first_two_tokens(std::string_view(line).substr(start), a, b)) {
      throw ParseError("expected at least two columns", line_no);
    }
    edges.emplace_back(parse_id(a, line_no), parse_id(b, line_no));
  }
  BipartiteGraph g = BipartiteGraph::from_external_edges(edges);
  if (g.m_ == 0) throw ValidationError("graph '" + path + "' has no edges");
  return g;
}

void write_edge_list(const BipartiteGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << "% bip\n";
  for (std::uint32_t ui = 0; ui < g.layer_size(Layer::Upper); ++ui) {
    const VertexRef u{Layer::Upper, ui};
    for (std::uint32_t li : g.neighbors(u)) {
      out << g.external_id(u) << ' ' << g.external_id({Layer::Lower, li}) << '\n';
    }
  }
  if (!out) throw ParseError("write failed for '" + path + "'");
}

BipartiteGraph generate_synthetic(std::uint32_t n_upper, std::uint32_t n_lower, double density,
                                  std::uint64_t seed) {
  if (n_upper == 0 || n_lower == 0) throw ValidationError("layer sizes must be positive");
  if (!(density > 0.0 && density <= 1.0)) {
    throw ValidationError("density must lie in (0, 1]");
  }
  BipartiteGraph g(n_upper, n_lower);
  const RandomSource src(seed);
  for (std::uint32_t ui = 0; ui < n_upper; ++ui) {
    RngStream row = src.stream(stream_slot(Layer::Upper, ui), 0);
    auto& nbrs = g.upper_adj_[ui];
    for (std::uint32_t li = 0; li < n_lower; ++li) {
      if (row.bernoulli(density)) nbrs.push_back(li);
    }
    for (std::uint32_t li : nbrs) g.lower_adj_[li].push_back(ui);
    g.m_ += nbrs.size();
  }
  return g;
}

std::uint64_t exact_common_neighbors(const BipartiteGraph& g, const QueryPair& q) {
  g.check_pair(q);
  const auto& a = g.neighbors(q.u);
  const auto& b = g.neighbors(q.w);
  std::uint64_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::vector<QueryPair> sample_query_pairs(const BipartiteGraph& g, Layer layer, std::size_t count,
                                          std::optional<double> kappa, std::uint64_t seed) {
  const std::uint32_t n = g.layer_size(layer);
  if (n < 2) throw ValidationError("need at least two vertices on the query layer");
  if (count == 0) throw ValidationError("pair count must be positive");
  if (kappa && !(*kappa > 0.0)) throw ValidationError("kappa must be positive");

  RngStream stream = RandomSource(seed).stream(kSamplerSlot, 0);
  std::vector<QueryPair> out;
  out.reserve(count);
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (std::size_t attempt = 0; attempt < kMaxSampleAttempts && out.size() < count; ++attempt) {
    std::uint32_t i = static_cast<std::uint32_t>(stream.next_index(n));
    std::uint32_t j = static_cast<std::uint32_t>(stream.next_index(n));
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    if (kappa) {
      const double du = g.degree({layer, i});
      const double dw = g.degree({layer, j});
      if (!(std::max(du, dw) > *kappa * std::min(du, dw))) continue;
    }
    if (!seen.emplace(i, j).second) continue;
    out.push_back({{layer, i}, {layer, j}});
  }
  if (out.size() < count) {
    throw InfeasibleSamplingError(
        "pair sampling exhausted " + std::to_string(kMaxSampleAttempts) + " attempts: found " +
            std::to_string(out.size()) + " of " + std::to_string(count) + " requested pairs",
        out.size(), count);
  }
  return out;
}

}  // namespace cnldp
