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

#include "tqaoa/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tqaoa {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string coloring_string(const Coloring& c) {
  std::string s;
  for (const int x : c) s.push_back(static_cast<char>('0' + x));
  return s;
}

nlohmann::json count_row_json(const CountRow& r) {
  return {{"bitstring", r.bitstring},
          {"count", r.count},
          {"coloring", coloring_string(r.coloring)},
          {"cut", r.cut}};
}

}  // namespace

std::vector<CountRow> tabulate_counts(const Graph& g,
                                      const std::map<std::uint64_t, std::uint64_t>& counts) {
  const std::size_t n = g.num_vertices();
  std::vector<CountRow> rows;
  rows.reserve(counts.size());
  for (const auto& [index, count] : counts) {
    auto coloring = decode_bitstring(index, n);
    const double cut = cut_value(g, coloring);
    rows.push_back({index, render_bitstring(index, n), count, std::move(coloring), cut});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const CountRow& a, const CountRow& b) {
    return a.count != b.count ? a.count > b.count : a.index < b.index;
  });
  return rows;
}

RunReport solve(const Graph& g, const SolveOptions& options) {
  options.protes.validate();
  options.refine.validate(2 * options.depth);
  if (options.shots == 0) throw std::invalid_argument("shots must be positive");

  RunReport report;
  report.num_vertices = g.num_vertices();
  report.num_edges = g.num_edges();
  report.total_weight = g.total_weight();
  report.depth = options.depth;
  report.backend = options.backend;
  report.protes = options.protes;
  report.refine = options.refine;
  report.seed = options.seed;
  report.shots = options.shots;

  auto t0 = Clock::now();
  const auto brute = brute_force_max_cut(g, kColors);
  report.seconds_brute = seconds_since(t0);
  if (!(brute.optimal_cut > 0.0)) {
    throw std::invalid_argument("graph has no positive-weight edge; the approximation ratio is undefined");
  }
  report.optimal_cut = brute.optimal_cut;
  report.optimal_coloring = brute.coloring;

  const QaoaInstance instance(g, options.depth, options.backend);
  const ParameterGrid grid{2 * options.depth, options.protes.nodes};

  t0 = Clock::now();
  const auto trace = optimize(
      [&](std::span<const std::size_t> idx) { return instance.energy(grid.to_params(idx)); },
      grid.dims, options.protes);
  report.seconds_protes = seconds_since(t0);
  report.protes_index = trace.best_index;
  report.protes_theta = grid.to_params(trace.best_index).flatten();
  report.protes_energy = trace.best_value;
  report.protes_evaluations = trace.evaluations;
  report.protes_ratio =
      approximation_ratio(cut_from_energy(trace.best_value, g), brute.optimal_cut).ratio;

  t0 = Clock::now();
  const auto refined = refine(
      [&](std::span<const double> x) { return instance.energy(ParameterVector::unflatten(x)); },
      report.protes_theta, options.refine);
  report.seconds_refine = seconds_since(t0);
  report.theta = refined.point;
  report.refined_energy = refined.value;
  report.refine_evaluations = refined.evaluations;
  report.refined_ratio =
      approximation_ratio(cut_from_energy(refined.value, g), brute.optimal_cut).ratio;

  t0 = Clock::now();
  const auto rows = measure(g, ParameterVector::unflatten(report.theta), options.shots,
                            options.seed, options.backend);
  report.seconds_sample = seconds_since(t0);
  double weighted = 0.0;
  for (const auto& r : rows) weighted += r.cut * static_cast<double>(r.count);
  report.shot_mean_cut = weighted / static_cast<double>(options.shots);
  report.top_counts.assign(rows.begin(),
                           rows.begin() + static_cast<std::ptrdiff_t>(
                                              std::min(rows.size(), options.top_counts)));
  return report;
}

nlohmann::json to_json(const RunReport& r, bool include_timings) {
  nlohmann::json top = nlohmann::json::array();
  for (const auto& row : r.top_counts) top.push_back(count_row_json(row));

  nlohmann::json j = {
      {"graph", {{"n", r.num_vertices}, {"edges", r.num_edges}, {"total_weight", r.total_weight}}},
      {"p", r.depth},
      {"backend", to_string(r.backend)},
      {"seed", r.seed},
      {"protes_config",
       {{"R", r.protes.rank},
        {"K", r.protes.samples},
        {"k", r.protes.elites},
        {"k_gd", r.protes.ascent_steps},
        {"lambda", r.protes.learning_rate},
        {"N", r.protes.nodes},
        {"m", r.protes.budget},
        {"seed", r.protes.seed}}},
      {"refine_config",
       {{"max_evals", r.refine.max_evals},
        {"initial_step", r.refine.initial_step},
        {"tol", r.refine.tol},
        {"seed", r.refine.seed}}},
      {"optimal_cut", r.optimal_cut},
      {"optimal_coloring", coloring_string(r.optimal_coloring)},
      {"protes",
       {{"index", r.protes_index},
        {"theta", r.protes_theta},
        {"energy", r.protes_energy},
        {"expected_cut", (r.total_weight - r.protes_energy) / 2.0},
        {"alpha", r.protes_ratio},
        {"evaluations", r.protes_evaluations}}},
      {"refined",
       {{"energy", r.refined_energy},
        {"expected_cut", (r.total_weight - r.refined_energy) / 2.0},
        {"alpha", r.refined_ratio},
        {"evaluations", r.refine_evaluations}}},
      {"theta", r.theta},
      {"shots", r.shots},
      {"shot_mean_cut", r.shot_mean_cut},
      {"top_counts", top},
  };
  if (include_timings) {
    j["seconds"] = {{"brute", r.seconds_brute},
                    {"protes", r.seconds_protes},
                    {"refine", r.seconds_refine},
                    {"sample", r.seconds_sample}};
  }
  return j;
}

double LandscapeScan::gamma(std::size_t i) const {
  return 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(resolution);
}

double LandscapeScan::beta(std::size_t j) const { return gamma(j); }

std::size_t LandscapeScan::argmin() const {
  return static_cast<std::size_t>(std::min_element(energy.begin(), energy.end()) - energy.begin());
}

LandscapeScan scan_landscape(const Graph& g, std::size_t resolution, Backend backend) {
  if (resolution < 2) throw std::invalid_argument("landscape resolution must be >= 2");
  const QaoaInstance instance(g, 1, backend);
  LandscapeScan scan{resolution, std::vector<double>(resolution * resolution)};
  for (std::size_t i = 0; i < resolution; ++i)
    for (std::size_t j = 0; j < resolution; ++j)
      scan.energy[i * resolution + j] = instance.energy({{scan.gamma(i)}, {scan.beta(j)}});
  return scan;
}

void write_landscape_csv(std::ostream& out, const LandscapeScan& scan) {
  const auto old_precision = out.precision(17);
  out << "gamma,beta,energy\n";
  for (std::size_t i = 0; i < scan.resolution; ++i)
    for (std::size_t j = 0; j < scan.resolution; ++j)
      out << scan.gamma(i) << ',' << scan.beta(j) << ',' << scan.at(i, j) << '\n';
  out.precision(old_precision);
}

std::size_t count_near_optimal_components(const LandscapeScan& scan, double rel_tol,
                                          bool periodic) {
  const std::size_t r = scan.resolution;
  const double lo = scan.energy[scan.argmin()];
  const double cutoff = lo + rel_tol * std::abs(lo);
  std::vector<int> label(r * r, -1);
  std::size_t components = 0;
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < r * r; ++start) {
    if (label[start] >= 0 || scan.energy[start] > cutoff) continue;
    stack.assign(1, start);
    label[start] = static_cast<int>(components);
    while (!stack.empty()) {
      const std::size_t c = stack.back();
      stack.pop_back();
      const std::size_t i = c / r, j = c % r;
      const std::ptrdiff_t di[] = {-1, 1, 0, 0};
      const std::ptrdiff_t dj[] = {0, 0, -1, 1};
      for (int k = 0; k < 4; ++k) {
        std::ptrdiff_t ni = static_cast<std::ptrdiff_t>(i) + di[k];
        std::ptrdiff_t nj = static_cast<std::ptrdiff_t>(j) + dj[k];
        const auto rr = static_cast<std::ptrdiff_t>(r);
        if (periodic) {
          ni = (ni + rr) % rr;
          nj = (nj + rr) % rr;
        } else if (ni < 0 || nj < 0 || ni >= rr || nj >= rr) {
          continue;
        }
        const std::size_t nb = static_cast<std::size_t>(ni) * r + static_cast<std::size_t>(nj);
        if (label[nb] >= 0 || scan.energy[nb] > cutoff) continue;
        label[nb] = static_cast<int>(components);
        stack.push_back(nb);
      }
    }
    ++components;
  }
  return components;
}

std::vector<CountRow> measure(const Graph& g, const ParameterVector& theta, std::size_t shots,
                              std::uint64_t seed, Backend backend) {
  const QaoaInstance instance(g, theta.depth(), backend);
  const auto state = instance.run(theta);
  Rng rng(seed);
  return tabulate_counts(g, sample_counts(state, shots, rng));
}

void write_histogram_csv(std::ostream& out, const std::vector<CountRow>& rows) {
  out << "bitstring,count,coloring,cut\n";
  const auto old_precision = out.precision(17);
  for (const auto& r : rows)
    out << r.bitstring << ',' << r.count << ',' << coloring_string(r.coloring) << ',' << r.cut
        << '\n';
  out.precision(old_precision);
}

nlohmann::json brute_report(const Graph& g, int k) {
  const auto result = brute_force_max_cut(g, k);
  return {{"n", g.num_vertices()},
          {"k", k},
          {"optimal_cut", result.optimal_cut},
          {"coloring", result.coloring}};
}

std::vector<double> parse_theta(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    const auto j = nlohmann::json::parse(text);
    if (!j.contains("theta")) throw std::invalid_argument("JSON input has no \"theta\" field");
    return j.at("theta").get<std::vector<double>>();
  }
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<double> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || !std::isfinite(v)) {
      throw std::invalid_argument("bad angle '" + tok + "'");
    }
    out.push_back(v);
  }
  if (out.empty() || out.size() % 2 != 0) {
    throw std::invalid_argument("theta needs 2p angles, got " + std::to_string(out.size()));
  }
  return out;
}

}  // namespace tqaoa
