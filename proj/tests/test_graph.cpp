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

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "cnldp/graph.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cnldp;
using cnldp::test::write_file;

TEST_CASE("edge list basic parse") {
  auto path = write_file("basic.tsv", "1 1\n1 2\n2 1\n");
  auto g = load_edge_list(path);
  CHECK(g.layer_size(Layer::Upper) == 2);
  CHECK(g.layer_size(Layer::Lower) == 2);
  CHECK(g.edge_count() == 3);
}

TEST_CASE("duplicate edges collapse") {
  auto path = write_file("dup.tsv", "1 1\n1 1\n");
  auto g = load_edge_list(path);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("comments, blanks, and trailing columns are ignored") {
  auto path = write_file("konect.tsv",
                         "% bip\n"
                         "# a comment\n"
                         "\n"
                         "1 1 5 98765\n"
                         "2 2 1 12345\n");
  auto g = load_edge_list(path);
  CHECK(g.edge_count() == 2);
  CHECK(g.layer_size(Layer::Upper) == 2);
}

TEST_CASE("sparse external ids map to dense internal indices") {
  auto path = write_file("sparse.tsv", "5 7\n5 9\n12 7\n");
  auto g = load_edge_list(path);
  CHECK(g.layer_size(Layer::Upper) == 2);
  CHECK(g.layer_size(Layer::Lower) == 2);
  // First appearance order fixes the internal index.
  CHECK(g.internal_index(Layer::Upper, 5) == 0);
  CHECK(g.internal_index(Layer::Upper, 12) == 1);
  CHECK(g.internal_index(Layer::Lower, 7) == 0);
  CHECK(g.external_id({Layer::Upper, 0}) == 5);
  CHECK(g.external_id({Layer::Lower, 1}) == 9);
  CHECK(!g.internal_index(Layer::Upper, 9).has_value());
}

TEST_CASE("malformed token reports its line") {
  auto path = write_file("bad.tsv", "1 1\n2 x\n");
  try {
    load_edge_list(path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("id zero and empty input are rejected") {
  CHECK_THROWS_AS(load_edge_list(write_file("zero.tsv", "0 1\n")), ValidationError);
  CHECK_THROWS_AS(load_edge_list(write_file("empty.tsv", "% bip\n# only comments\n")),
                  ValidationError);
  CHECK_THROWS_AS(load_edge_list("/no/such/file.tsv"), ParseError);
}

TEST_CASE("write then reload reproduces the graph") {
  auto g = generate_synthetic(30, 40, 0.1, 77);
  auto path = (cnldp::test::scratch_dir() / "roundtrip.tsv").string();
  write_edge_list(g, path);
  auto h = load_edge_list(path);
  CHECK(g.summary_json() == h.summary_json());
  for (std::uint32_t i = 0; i < 30; ++i) {
    CHECK(g.neighbors({Layer::Upper, i}) == h.neighbors({Layer::Upper, i}));
  }
  for (std::uint32_t j = 0; j < 40; ++j) {
    CHECK(g.external_id({Layer::Lower, j}) == h.external_id({Layer::Lower, j}));
  }
}

TEST_CASE("synthetic graph density one is complete") {
  auto g = generate_synthetic(3, 3, 1.0, 123);
  CHECK(g.edge_count() == 9);
  for (std::uint32_t i = 0; i < 3; ++i) CHECK(g.degree({Layer::Upper, i}) == 3);
}

TEST_CASE("synthetic edge count concentrates around its mean") {
  auto g = generate_synthetic(100, 100, 0.1, 7);
  // Binomial(10^4, 0.1): mean 1000, sigma 30.
  CHECK(g.edge_count() > 1000 - 4 * 30);
  CHECK(g.edge_count() < 1000 + 4 * 30);
}

TEST_CASE("synthetic generation is a pure function of its arguments") {
  auto a = generate_synthetic(50, 60, 0.2, 9);
  auto b = generate_synthetic(50, 60, 0.2, 9);
  REQUIRE(a.edge_count() == b.edge_count());
  for (std::uint32_t i = 0; i < 50; ++i) {
    CHECK(a.neighbors({Layer::Upper, i}) == b.neighbors({Layer::Upper, i}));
  }
  auto c = generate_synthetic(50, 60, 0.2, 10);
  bool same = c.edge_count() == a.edge_count();
  if (same) {
    for (std::uint32_t i = 0; i < 50 && same; ++i) {
      same = a.neighbors({Layer::Upper, i}) == c.neighbors({Layer::Upper, i});
    }
  }
  CHECK(!same);
}

TEST_CASE("synthetic parameter validation") {
  CHECK_THROWS_AS(generate_synthetic(10, 10, 0.0, 1), ValidationError);
  CHECK_THROWS_AS(generate_synthetic(10, 10, 1.5, 1), ValidationError);
  CHECK_THROWS_AS(generate_synthetic(0, 10, 0.5, 1), ValidationError);
}

TEST_CASE("common neighbor count on a hand-built pair") {
  // Two upper vertices sharing exactly three lower neighbors.
  auto g = BipartiteGraph::from_internal_edges(
      2, 5, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 1}, {1, 2}, {1, 4}});
  QueryPair q{{Layer::Upper, 0}, {Layer::Upper, 1}};
  CHECK(exact_common_neighbors(g, q) == 3);
  QueryPair rev{{Layer::Upper, 1}, {Layer::Upper, 0}};
  CHECK(exact_common_neighbors(g, rev) == 3);
}

TEST_CASE("equal neighbor lists intersect to their full length") {
  auto g = BipartiteGraph::from_internal_edges(2, 6,
                                               {{0, 1}, {0, 3}, {0, 5}, {1, 1}, {1, 3}, {1, 5}});
  CHECK(exact_common_neighbors(g, {{Layer::Upper, 0}, {Layer::Upper, 1}}) == 3);
}

TEST_CASE("common neighbor count agrees with a brute force scan") {
  auto g = generate_synthetic(50, 50, 0.2, 31);
  for (std::uint32_t i = 0; i < 50; ++i) {
    for (std::uint32_t j = i + 1; j < 50; ++j) {
      QueryPair q{{Layer::Upper, i}, {Layer::Upper, j}};
      std::uint64_t brute = 0;
      for (std::uint32_t v = 0; v < 50; ++v) {
        const auto& ni = g.neighbors({Layer::Upper, i});
        const auto& nj = g.neighbors({Layer::Upper, j});
        const bool in_i = std::binary_search(ni.begin(), ni.end(), v);
        const bool in_j = std::binary_search(nj.begin(), nj.end(), v);
        if (in_i && in_j) ++brute;
      }
      REQUIRE(exact_common_neighbors(g, q) == brute);
      REQUIRE(brute <= std::min(g.degree(q.u), g.degree(q.w)));
    }
  }
}

TEST_CASE("pair validation rejects bad shapes") {
  auto g = generate_synthetic(5, 5, 0.5, 1);
  CHECK_THROWS_AS(g.check_pair({{Layer::Upper, 0}, {Layer::Lower, 1}}), ValidationError);
  CHECK_THROWS_AS(g.check_pair({{Layer::Upper, 2}, {Layer::Upper, 2}}), ValidationError);
  CHECK_THROWS_AS(g.check_pair({{Layer::Upper, 0}, {Layer::Upper, 9}}), ValidationError);
  CHECK_NOTHROW(g.check_pair({{Layer::Upper, 0}, {Layer::Upper, 1}}));
}

TEST_CASE("pair sampling contract") {
  auto g = generate_synthetic(200, 50, 0.1, 13);
  auto pairs = sample_query_pairs(g, Layer::Upper, 100, std::nullopt, 5);
  REQUIRE(pairs.size() == 100);
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (const auto& q : pairs) {
    CHECK(q.u.layer == Layer::Upper);
    CHECK(q.w.layer == Layer::Upper);
    CHECK(q.u.index != q.w.index);
    seen.insert({q.u.index, q.w.index});
  }
  CHECK(seen.size() == 100);

  auto again = sample_query_pairs(g, Layer::Upper, 100, std::nullopt, 5);
  REQUIRE(again.size() == 100);
  for (std::size_t i = 0; i < 100; ++i) {
    CHECK(pairs[i].u.index == again[i].u.index);
    CHECK(pairs[i].w.index == again[i].w.index);
  }
}

TEST_CASE("degree gap filter at threshold one means strict inequality") {
  auto g = generate_synthetic(100, 100, 0.1, 21);
  auto pairs = sample_query_pairs(g, Layer::Upper, 50, 1.0, 3);
  for (const auto& q : pairs) {
    const double du = g.degree(q.u), dw = g.degree(q.w);
    CHECK(std::max(du, dw) > std::min(du, dw));
  }
}

TEST_CASE("unsatisfiable degree gap reports the shortfall") {
  // Complete graph: all degrees equal, no pair can show any gap.
  auto g = generate_synthetic(20, 20, 1.0, 2);
  try {
    sample_query_pairs(g, Layer::Upper, 10, 1000.0, 4);
    FAIL("expected InfeasibleSamplingError");
  } catch (const InfeasibleSamplingError& e) {
    CHECK(e.found() == 0);
    CHECK(e.requested() == 10);
  }
}

TEST_CASE("summary json lists the headline counts") {
  auto g = BipartiteGraph::from_internal_edges(2, 3, {{0, 0}, {0, 1}, {1, 2}});
  auto s = g.summary_json();
  CHECK(s.find("\"n1\":2") != std::string::npos);
  CHECK(s.find("\"n2\":3") != std::string::npos);
  CHECK(s.find("\"m\":3") != std::string::npos);
  CHECK(s.find("max_deg_upper") != std::string::npos);
}
