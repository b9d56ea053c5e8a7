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
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string_view>
#include <string>
#include <vector>

#include "json.hpp"
#include "tqaoa/graph.hpp"
#include "tqaoa/protes.hpp"
#include "tqaoa/refine.hpp"
#include "tqaoa/simulator.hpp"

namespace tqaoa {

/// One measured bitstring with its decoded coloring.
struct CountRow {
  std::uint64_t index = 0;
  std::string bitstring;
  std::uint64_t count = 0;
  Coloring coloring;
  double cut = 0.0;
};

/// Counts sorted by count descending, then basis index ascending.
std::vector<CountRow> tabulate_counts(const Graph& g,
                                      const std::map<std::uint64_t, std::uint64_t>& counts);

struct SolveOptions {
  std::size_t depth = 4;
  Backend backend = Backend::kDiagonal;
  ProtesConfig protes;
  RefineConfig refine;
  std::size_t shots = kDefaultShots;
  std::uint64_t seed = 0;      // measurement sampling
  std::size_t top_counts = 20; // rows kept in the report
};

struct RunReport {
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  double total_weight = 0.0;
  std::size_t depth = 0;
  Backend backend = Backend::kDiagonal;
  ProtesConfig protes;
  RefineConfig refine;
  std::uint64_t seed = 0;

  double optimal_cut = 0.0;  // C*
  Coloring optimal_coloring;

  MultiIndex protes_index;
  std::vector<double> protes_theta;
  double protes_energy = 0.0;  // E_P
  double protes_ratio = 0.0;   // alpha_P
  std::size_t protes_evaluations = 0;

  std::vector<double> theta;   // refined, (gamma_1..gamma_p, beta_1..beta_p)
  double refined_energy = 0.0; // E_C
  double refined_ratio = 0.0;  // alpha_C
  std::size_t refine_evaluations = 0;

  std::size_t shots = 0;
  double shot_mean_cut = 0.0;
  std::vector<CountRow> top_counts;

  double seconds_brute = 0.0;
  double seconds_protes = 0.0;
  double seconds_refine = 0.0;
  double seconds_sample = 0.0;
};

/// Brute force C*, PROTES over the 2p grid, Nelder-Mead refinement, and a
/// final shot measurement. Ratios use the exact statevector expectation.
RunReport solve(const Graph& g, const SolveOptions& options);

/// Timings are omitted unless requested so that reports are reproducible.
nlohmann::json to_json(const RunReport& report, bool include_timings = false);

/// p = 1 energy over a resolution x resolution grid on [0, 2pi)^2.
struct LandscapeScan {
  std::size_t resolution = 0;
  std::vector<double> energy;  // energy[i * resolution + j] at (gamma_i, beta_j)

  double gamma(std::size_t i) const;
  double beta(std::size_t j) const;
  double at(std::size_t i, std::size_t j) const { return energy[i * resolution + j]; }
  std::size_t argmin() const;
};

LandscapeScan scan_landscape(const Graph& g, std::size_t resolution,
                             Backend backend = Backend::kDiagonal);

void write_landscape_csv(std::ostream& out, const LandscapeScan& scan);

/// Connected components (4-neighbour) of cells with energy <= min + rel_tol * |min|.
/// With `periodic`, the grid wraps in both axes.
std::size_t count_near_optimal_components(const LandscapeScan& scan, double rel_tol,
                                          bool periodic = true);

/// Runs the circuit at theta and samples `shots` outcomes.
std::vector<CountRow> measure(const Graph& g, const ParameterVector& theta, std::size_t shots,
                              std::uint64_t seed, Backend backend = Backend::kDiagonal);

/// CSV: bitstring,count,coloring,cut.
void write_histogram_csv(std::ostream& out, const std::vector<CountRow>& rows);

nlohmann::json brute_report(const Graph& g, int k);

/// Reads 2p angles from either a solve report (JSON with "theta") or a list
/// of numbers separated by commas or whitespace.
std::vector<double> parse_theta(std::string_view text);

}  // namespace tqaoa
