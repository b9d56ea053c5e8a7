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

#include "tqaoa/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace tqaoa {

ParseError::ParseError(Kind kind, std::size_t line, const std::string& what)
    : GraphError(line ? "line " + std::to_string(line) + ": " + what : what),
      kind_(kind),
      line_(line) {}

Graph::Graph(std::size_t num_vertices, std::vector<Edge> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
  if (n_ == 0) throw GraphError("graph must have at least one vertex");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto& e : edges_) {
    if (e.u == e.v) {
      throw GraphError("self-loop on vertex " + std::to_string(e.u));
    }
    if (e.u >= n_ || e.v >= n_) {
      throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") references a vertex >= " + std::to_string(n_));
    }
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw GraphError("edge weight must be finite and non-negative");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.emplace(e.u, e.v).second) {
      throw GraphError("duplicate edge (" + std::to_string(e.u) + ", " +
                       std::to_string(e.v) + ")");
    }
    total_weight_ += e.weight;
  }
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
  return Graph(n, std::move(edges));
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

bool parse_index(const std::string& tok, std::size_t& out) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) return false;
  try {
    out = std::stoull(tok);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

bool parse_real(const std::string& tok, double& out) {
  std::size_t used = 0;
  try {
    out = std::stod(tok, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == tok.size() && std::isfinite(out);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  using Kind = ParseError::Kind;

  std::size_t n = 0;
  std::size_t m = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    const auto tokens = tokenize(line);

    if (!have_header) {
      if (tokens.size() != 2 || !parse_index(tokens[0], n) || !parse_index(tokens[1], m)) {
        throw ParseError(Kind::kMalformedLine, line_no, "expected header \"n m\"");
      }
      if (n == 0) throw ParseError(Kind::kMalformedLine, line_no, "vertex count must be positive");
      have_header = true;
      continue;
    }

    if (edges.size() == m) {
      throw ParseError(Kind::kEdgeCountMismatch, line_no,
                       "more edge lines than the declared " + std::to_string(m));
    }
    Edge e;
    if (tokens.size() < 2 || tokens.size() > 3 || !parse_index(tokens[0], e.u) ||
        !parse_index(tokens[1], e.v)) {
      throw ParseError(Kind::kMalformedLine, line_no, "expected \"i j [w]\"");
    }
    if (tokens.size() == 3 && !parse_real(tokens[2], e.weight)) {
      throw ParseError(Kind::kMalformedLine, line_no, "bad weight '" + tokens[2] + "'");
    }
    if (e.u >= n || e.v >= n) {
      throw ParseError(Kind::kVertexOutOfRange, line_no,
                       "vertex index out of range for n = " + std::to_string(n));
    }
    if (e.u == e.v) throw ParseError(Kind::kSelfLoop, line_no, "self-loop");
    if (e.weight < 0.0) throw ParseError(Kind::kNegativeWeight, line_no, "negative weight");
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw ParseError(Kind::kDuplicateEdge, line_no,
                       "duplicate edge (" + tokens[0] + ", " + tokens[1] + ")");
    }
    edges.push_back(e);
  }

  if (!have_header) throw ParseError(Kind::kMalformedLine, 0, "missing \"n m\" header");
  if (edges.size() != m) {
    throw ParseError(Kind::kEdgeCountMismatch, 0,
                     "expected " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  }
  return Graph(n, std::move(edges));
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out.precision(17);
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
  return out.str();
}

double total_weight(const Graph& g) { return g.total_weight(); }

double cut_value(const Graph& g, std::span<const int> colors) {
  if (colors.size() != g.num_vertices()) {
    throw std::invalid_argument("coloring length " + std::to_string(colors.size()) +
                                " does not match vertex count " +
                                std::to_string(g.num_vertices()));
  }
  double cut = 0.0;
  for (const auto& e : g.edges())
    if (colors[e.u] != colors[e.v]) cut += e.weight;
  return cut;
}

MaxCutResult brute_force_max_cut(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("color count must be positive");
  const std::size_t n = g.num_vertices();
  if (std::pow(static_cast<double>(k), static_cast<double>(n)) > kBruteForceLimit) {
    throw std::invalid_argument("brute force over " + std::to_string(k) + "^" +
                                std::to_string(n) + " colorings exceeds the size guard");
  }

  // Odometer over colorings in lexicographic order (vertex 0 most
  // significant), so a strict improvement test keeps the smallest optimum.
  Coloring colors(n, 0);
  MaxCutResult best{colors, cut_value(g, colors)};
  while (true) {
    std::size_t pos = n;
    while (pos > 0 && colors[pos - 1] == k - 1) colors[--pos] = 0;
    if (pos == 0) break;
    ++colors[pos - 1];
    const double cut = cut_value(g, colors);
    if (cut > best.optimal_cut) best = {colors, cut};
  }
  return best;
}

ApproximationReport approximation_ratio(double expected_cut, double optimal_cut) {
  if (!(optimal_cut > 0.0)) {
    throw std::invalid_argument("approximation ratio needs a positive optimal cut");
  }
  return {optimal_cut, expected_cut, expected_cut / optimal_cut};
}

}  // namespace tqaoa
