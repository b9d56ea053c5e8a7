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

#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tqaoa {

/// Undirected weighted edge, stored with u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Vertex colors, one entry per vertex, each in [0, k).
using Coloring = std::vector<int>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parse failure of an edge-list document. `line` is 1-based, 0 when the
/// failure is not tied to a single line (e.g. missing edges at EOF).
class ParseError : public GraphError {
 public:
  enum class Kind {
    kMalformedLine,
    kNegativeWeight,
    kDuplicateEdge,
    kVertexOutOfRange,
    kSelfLoop,
    kEdgeCountMismatch,
  };

  ParseError(Kind kind, std::size_t line, const std::string& what);

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// Weighted undirected simple graph. Immutable after construction.
class Graph {
 public:
  /// Validates and canonicalizes the edges. Throws GraphError on self-loops,
  /// out-of-range vertices, negative or non-finite weights and duplicate
  /// unordered pairs.
  Graph(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Sum of all edge weights.
  double total_weight() const noexcept { return total_weight_; }

  /// Unit-weight complete graph on n vertices.
  static Graph complete(std::size_t n);

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  double total_weight_ = 0.0;
};

/// Parses the edge-list text format:
///   first non-comment line "n m", then m lines "i j [w]" (w defaults to 1).
/// Lines starting with '#' and blank lines are skipped.
Graph parse_edge_list(std::string_view text);

Graph load_edge_list(const std::filesystem::path& path);

/// Serializes in the same format parse_edge_list accepts.
std::string to_edge_list(const Graph& g);

double total_weight(const Graph& g);

/// Sum of weights of edges whose endpoints have different colors.
double cut_value(const Graph& g, std::span<const int> colors);

struct MaxCutResult {
  Coloring coloring;
  double optimal_cut = 0.0;
};

/// Upper bound on k^n accepted by brute_force_max_cut.
inline constexpr double kBruteForceLimit = 1e8;

/// Exact max-k-cut by enumeration of all k^n colorings. Returns the
/// lexicographically smallest optimal coloring.
MaxCutResult brute_force_max_cut(const Graph& g, int k);

struct ApproximationReport {
  double optimal_cut = 0.0;
  double expected_cut = 0.0;
  double ratio = 0.0;
};

ApproximationReport approximation_ratio(double expected_cut, double optimal_cut);

}  // namespace tqaoa
