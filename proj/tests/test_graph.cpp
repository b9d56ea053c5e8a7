/*
 * Copyright 2026 The tensorqaoa Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <fstream>
#include <functional>

#include "doctest.h"
#include "helpers.hpp"
#include "tqaoa/graph.hpp"

using namespace tqaoa;
using tqaoa::testing::g4;

namespace {

// Independent oracle: recursive enumeration, highest vertex varied first.
double oracle_max_cut(const Graph& g, int k) {
  Coloring c(g.num_vertices(), 0);
  double best = 0.0;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == 0) {
      double cut = 0.0;
      for (const auto& e : g.edges())
        if (c[e.u] != c[e.v]) cut += e.weight;
      best = std::max(best, cut);
      return;
    }
    for (int x = 0; x < k; ++x) {
      c[pos - 1] = x;
      rec(pos - 1);
    }
  };
  rec(g.num_vertices());
  return best;
}

ParseError::Kind parse_kind(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("expected a parse error for: " << text);
  return ParseError::Kind::kMalformedLine;
}

}  // namespace

TEST_CASE("parse_edge_list examples") {
  const Graph g = parse_edge_list("4 5\n0 1 1\n0 2 1\n0 3 1\n1 2 1\n1 3 1");
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 5);
  CHECK(g.total_weight() == 5.0);
  for (const auto& e : g.edges()) CHECK_FALSE((e.u == 2 && e.v == 3));

  const Graph empty = parse_edge_list("1 0");
  CHECK(empty.num_vertices() == 1);
  CHECK(empty.num_edges() == 0);

  const Graph tri = parse_edge_list("3 3\n0 1 2.5\n1 2 1.0\n0 2 0.5");
  CHECK(tri.edges()[0] == Edge{0, 1, 2.5});
  CHECK(tri.edges()[1] == Edge{1, 2, 1.0});
  CHECK(tri.edges()[2] == Edge{0, 2, 0.5});
  CHECK(total_weight(tri) == 4.0);
}

TEST_CASE("parse_edge_list comments, default weight and canonical order") {
  const Graph g = parse_edge_list("# header\n\n3 2\n# edge block\n2 0\n1 2 4\n");
  CHECK(g.edges()[0] == Edge{0, 2, 1.0});
  CHECK(g.edges()[1] == Edge{1, 2, 4.0});
}

TEST_CASE("parse_edge_list rejects malformed input with a line number") {
  using K = ParseError::Kind;
  CHECK(parse_kind("") == K::kMalformedLine);
  CHECK(parse_kind("3\n") == K::kMalformedLine);
  CHECK(parse_kind("3 1\n0 x\n") == K::kMalformedLine);
  CHECK(parse_kind("3 1\n0 1 1 9\n") == K::kMalformedLine);
  CHECK(parse_kind("3 1\n0 1 -1\n") == K::kNegativeWeight);
  CHECK(parse_kind("3 2\n0 1\n1 0\n") == K::kDuplicateEdge);
  CHECK(parse_kind("3 1\n0 3\n") == K::kVertexOutOfRange);
  CHECK(parse_kind("3 1\n1 1\n") == K::kSelfLoop);
  CHECK(parse_kind("3 2\n0 1\n") == K::kEdgeCountMismatch);
  CHECK(parse_kind("3 1\n0 1\n1 2\n") == K::kEdgeCountMismatch);

  try {
    parse_edge_list("# c\n3 1\n0 1 -2\n");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("Graph constructor validates") {
  CHECK_THROWS_AS(Graph(2, {{0, 0, 1.0}}), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, 2, 1.0}}), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, 1, -1.0}}), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, 1, NAN}}), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, 1, 1.0}, {1, 0, 1.0}}), GraphError);
  CHECK(Graph::complete(5).num_edges() == 10);
}

TEST_CASE("edge list round trip") {
  Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    const Graph g = tqaoa::testing::random_graph(6, rng);
    const Graph h = parse_edge_list(to_edge_list(g));
    CHECK(h.num_vertices() == g.num_vertices());
    REQUIRE(h.num_edges() == g.num_edges());
    for (std::size_t i = 0; i < g.num_edges(); ++i) CHECK(h.edges()[i] == g.edges()[i]);
  }
  const Graph tri = parse_edge_list("3 3\n0 1 2.5\n1 2 1.0\n0 2 0.5");
  const Graph back = parse_edge_list(to_edge_list(tri));
  CHECK(back.total_weight() == 4.0);
}

TEST_CASE("load_edge_list reads the shipped G4 file") {
  const Graph g = load_edge_list(tqaoa::testing::data_path("g4.txt"));
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 5);
  CHECK_THROWS(load_edge_list(tqaoa::testing::data_path("does_not_exist.txt")));
}

TEST_CASE("total_weight examples") {
  CHECK(total_weight(g4()) == 5.0);
  CHECK(total_weight(Graph(3, {})) == 0.0);
}

TEST_CASE("cut_value examples") {
  const Graph tri = Graph::complete(3);
  CHECK(cut_value(tri, Coloring{0, 1, 2}) == 3.0);
  // Vertices 2 and 3 are the non-adjacent pair of G4.
  CHECK(cut_value(g4(), Coloring{0, 1, 2, 2}) == 5.0);
  CHECK(cut_value(g4(), Coloring{1, 1, 1, 1}) == 0.0);
  CHECK_THROWS(cut_value(g4(), Coloring{0, 1, 2}));
}

TEST_CASE("brute_force_max_cut examples") {
  const auto r4 = brute_force_max_cut(g4(), 3);
  CHECK(r4.optimal_cut == 5.0);
  CHECK(cut_value(g4(), r4.coloring) == 5.0);
  CHECK(brute_force_max_cut(Graph::complete(3), 3).optimal_cut == 3.0);
  CHECK(brute_force_max_cut(Graph::complete(4), 3).optimal_cut == 5.0);
  CHECK(brute_force_max_cut(Graph::complete(5), 3).optimal_cut == 8.0);
  CHECK(brute_force_max_cut(Graph(3, {}), 3).optimal_cut == 0.0);
  // Lexicographically smallest optimum.
  CHECK(brute_force_max_cut(Graph::complete(2), 3).coloring == Coloring{0, 1});
}

TEST_CASE("brute_force_max_cut agrees with an independent enumeration") {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + rng.below(5);
    const Graph g = tqaoa::testing::random_graph(n, rng);
    for (int k : {2, 3}) {
      const auto r = brute_force_max_cut(g, k);
      CHECK(r.optimal_cut == oracle_max_cut(g, k));
      CHECK(cut_value(g, r.coloring) == r.optimal_cut);
      for (int c : r.coloring) CHECK((c >= 0 && c < k));
    }
  }
}

TEST_CASE("brute_force_max_cut guards") {
  CHECK_THROWS(brute_force_max_cut(g4(), 0));
  CHECK_THROWS(brute_force_max_cut(Graph::complete(30), 3));
}

TEST_CASE("approximation_ratio examples") {
  CHECK(approximation_ratio(4.35, 5.0).ratio == doctest::Approx(0.87).epsilon(1e-12));
  CHECK(approximation_ratio(5.0, 5.0).ratio == 1.0);
  CHECK(approximation_ratio(0.0, 5.0).ratio == 0.0);
  CHECK_THROWS(approximation_ratio(1.0, 0.0));
}
