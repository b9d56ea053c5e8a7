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

// Command-line front end: solve | landscape | hist | brute.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tqaoa/config.hpp"
#include "tqaoa/pipeline.hpp"

namespace {

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QAOA max-3-cut with tensor-train sampling optimization"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string out_path;
  std::string config_path;
  std::string backend_name = "diagonal";
  std::size_t depth = 4;
  std::size_t shots = tqaoa::kDefaultShots;
  std::optional<std::uint64_t> seed;
  std::size_t resolution = 100;
  int colors = tqaoa::kColors;
  std::string theta_inline;
  std::string theta_file;
  bool timings = false;

  auto* solve = app.add_subcommand("solve", "PROTES then Nelder-Mead on a graph; JSON report");
  solve->add_option("--graph", graph_path, "edge-list file")->required();
  solve->add_option("--p", depth, "QAOA depth")->check(CLI::PositiveNumber);
  solve->add_option("--backend", backend_name, "diagonal|gate")
      ->check(CLI::IsMember({"diagonal", "gate"}));
  solve->add_option("--shots", shots, "final measurement shots")->check(CLI::PositiveNumber);
  solve->add_option("--seed", seed, "seed for PROTES, refinement and sampling");
  solve->add_option("--config", config_path, "key = value hyperparameter file");
  solve->add_option("--out", out_path, "write report here instead of stdout");
  solve->add_flag("--timings", timings, "include wall-clock timings in the report");

  auto* landscape = app.add_subcommand("landscape", "p = 1 energy scan over [0, 2pi)^2; CSV");
  landscape->add_option("--graph", graph_path, "edge-list file")->required();
  landscape->add_option("--resolution", resolution, "grid points per axis")
      ->check(CLI::Range(2, 100000));
  landscape->add_option("--backend", backend_name, "diagonal|gate")
      ->check(CLI::IsMember({"diagonal", "gate"}));
  landscape->add_option("--out", out_path, "write CSV here instead of stdout");

  auto* hist = app.add_subcommand("hist", "measurement histogram at given angles; CSV");
  hist->add_option("--graph", graph_path, "edge-list file")->required();
  auto* theta_opt = hist->add_option("--theta", theta_inline, "comma-separated gammas then betas");
  auto* theta_file_opt =
      hist->add_option("--theta-file", theta_file, "angle list or a solve report (JSON)");
  theta_opt->excludes(theta_file_opt);
  hist->add_option("--p", depth, "expected QAOA depth (checked against theta)")
      ->check(CLI::PositiveNumber);
  hist->add_option("--shots", shots, "shots")->check(CLI::PositiveNumber);
  hist->add_option("--seed", seed, "sampling seed");
  hist->add_option("--backend", backend_name, "diagonal|gate")
      ->check(CLI::IsMember({"diagonal", "gate"}));
  hist->add_option("--out", out_path, "write CSV here instead of stdout");

  auto* brute = app.add_subcommand("brute", "exact max-k-cut by enumeration; JSON");
  brute->add_option("--graph", graph_path, "edge-list file")->required();
  brute->add_option("--k", colors, "number of colors")->check(CLI::PositiveNumber);
  brute->add_option("--out", out_path, "write JSON here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    const tqaoa::Graph graph = tqaoa::load_edge_list(graph_path);
    const auto backend = tqaoa::backend_from_string(backend_name);

    if (solve->parsed()) {
      tqaoa::SolveOptions options;
      options.depth = depth;
      options.backend = backend;
      options.shots = shots;
      if (!config_path.empty()) {
        tqaoa::apply_config(tqaoa::load_key_values(config_path), options.protes, options.refine);
      }
      options.seed = options.protes.seed;
      if (seed) options.seed = options.protes.seed = options.refine.seed = *seed;
      const auto report = tqaoa::solve(graph, options);
      Output out(out_path);
      out.stream() << tqaoa::to_json(report, timings).dump(2) << '\n';
    } else if (landscape->parsed()) {
      const auto scan = tqaoa::scan_landscape(graph, resolution, backend);
      Output out(out_path);
      tqaoa::write_landscape_csv(out.stream(), scan);
    } else if (hist->parsed()) {
      if (theta_inline.empty() && theta_file.empty()) {
        throw std::invalid_argument("hist needs --theta or --theta-file");
      }
      const auto flat =
          tqaoa::parse_theta(theta_inline.empty() ? read_file(theta_file) : theta_inline);
      if (hist->count("--p") && flat.size() != 2 * depth) {
        throw std::invalid_argument("theta has " + std::to_string(flat.size()) +
                                    " angles, expected 2p = " + std::to_string(2 * depth));
      }
      const auto rows = tqaoa::measure(graph, tqaoa::ParameterVector::unflatten(flat), shots,
                                       seed.value_or(0), backend);
      Output out(out_path);
      tqaoa::write_histogram_csv(out.stream(), rows);
    } else if (brute->parsed()) {
      Output out(out_path);
      out.stream() << tqaoa::brute_report(graph, colors).dump(2) << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
