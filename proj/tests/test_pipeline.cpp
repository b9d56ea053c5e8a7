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
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "tqaoa/pipeline.hpp"

using namespace tqaoa;
using tqaoa::testing::g4;
using std::numbers::pi;

TEST_CASE("tabulate_counts orders by count then index") {
  const Graph g(2, {{0, 1, 1.0}});
  const std::map<std::uint64_t, std::uint64_t> counts{{0b0100, 3}, {0b0000, 3}, {0b1101, 9}};
  const auto rows = tabulate_counts(g, counts);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].index == 0b1101);
  CHECK(rows[0].bitstring == "0111");
  CHECK(rows[0].coloring == Coloring{1, 2});
  CHECK(rows[0].cut == 1.0);
  CHECK(rows[1].index == 0b0000);
  CHECK(rows[1].cut == 0.0);
  CHECK(rows[2].index == 0b0100);
}

TEST_CASE("solve on G4") {
  SolveOptions opt;
  opt.seed = opt.protes.seed = opt.refine.seed = 3;
  const auto r = solve(g4(), opt);
  CHECK(r.optimal_cut == 5.0);
  CHECK(cut_value(g4(), r.optimal_coloring) == 5.0);
  CHECK(r.protes_evaluations == 1000);
  CHECK(r.refine_evaluations <= 10000);
  CHECK(r.refined_ratio >= r.protes_ratio);
  CHECK(r.refined_ratio >= 0.84);
  CHECK(r.theta.size() == 8);
  CHECK(r.refined_energy == doctest::Approx(QaoaInstance(g4(), 4).energy(
                                                ParameterVector::unflatten(r.theta)))
                               .epsilon(1e-12));
  REQUIRE(r.top_counts.size() >= 10);
  for (std::size_t i = 0; i < 10; ++i) CHECK(r.top_counts[i].cut == 5.0);

  const auto j = to_json(r);
  CHECK_FALSE(j.contains("seconds"));
  CHECK(j["optimal_cut"] == 5.0);
  CHECK(j["p"] == 4);
  CHECK(to_json(r, true).contains("seconds"));
  CHECK(to_json(solve(g4(), opt)).dump() == j.dump());
}

TEST_CASE("solve on a single edge reaches the p=1 landscape optimum") {
  // The best p=1 expected cut for one edge is 0.95642 (dense scan and local
  // refinement agree); a perfect ratio is not reachable at this depth.
  const Graph edge(2, {{0, 1, 1.0}});
  SolveOptions opt;
  opt.depth = 1;
  const auto r = solve(edge, opt);
  const auto scan = scan_landscape(edge, 200);
  const double scan_ratio = cut_from_energy(scan.energy[scan.argmin()], edge);
  CHECK(r.refined_ratio >= scan_ratio - 1e-9);
  CHECK(r.refined_ratio == doctest::Approx(0.956425).epsilon(1e-5));
}

TEST_CASE("solve rejects graphs without a positive cut") {
  CHECK_THROWS_AS(solve(Graph(3, {}), SolveOptions{}), std::invalid_argument);
}

TEST_CASE("landscape properties on G4") {
  const auto scan = scan_landscape(g4(), 100);
  REQUIRE(scan.energy.size() == 10000);
  for (double e : scan.energy) {
    CHECK(e >= 5.0 - 2 * 5.0 - 1e-12);
    CHECK(e <= 5.0 + 1e-12);
  }
  for (std::size_t j = 0; j < 100; ++j) CHECK(scan.at(0, j) == doctest::Approx(-1.25).epsilon(1e-12));
  CHECK(count_near_optimal_components(scan, 0.01) == 4);
  CHECK(count_near_optimal_components(scan, 0.01, false) == 4);

  const auto i = scan.argmin() / 100, j = scan.argmin() % 100;
  const QaoaInstance inst(g4(), 1);
  CHECK(inst.energy({{scan.gamma(i)}, {scan.beta(j)}}) == scan.energy[scan.argmin()]);

  const auto gate = scan_landscape(g4(), 10, Backend::kGateLevel);
  const auto diag = scan_landscape(g4(), 10);
  for (std::size_t c = 0; c < 100; ++c) CHECK(gate.energy[c] == doctest::Approx(diag.energy[c]).epsilon(1e-10));
  CHECK_THROWS(scan_landscape(g4(), 1));
}

TEST_CASE("component counting") {
  LandscapeScan s{4, std::vector<double>(16, 0.0)};
  for (std::size_t c : {0, 3, 12, 15, 5}) s.energy[c] = -1.0;
  CHECK(count_near_optimal_components(s, 0.01, false) == 5);
  // The four corners join across both periodic boundaries.
  CHECK(count_near_optimal_components(s, 0.01, true) == 2);
}

TEST_CASE("landscape CSV") {
  const auto scan = scan_landscape(g4(), 2);
  std::ostringstream out;
  write_landscape_csv(out, scan);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "gamma,beta,energy");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 4);
}

TEST_CASE("measure") {
  const auto zeros = measure(g4(), {{0.0}, {0.0}}, 4096 * 4, 5);
  // Identity circuit: chi-square against the uniform distribution over 256 strings.
  double chi2 = 0.0, total = 0.0;
  for (const auto& r : zeros) total += static_cast<double>(r.count);
  const double expected = total / 256.0;
  std::size_t seen = 0;
  for (const auto& r : zeros) {
    chi2 += std::pow(static_cast<double>(r.count) - expected, 2) / expected;
    ++seen;
  }
  chi2 += static_cast<double>(256 - seen) * expected;
  // 255 degrees of freedom: mean 255, sd sqrt(510).
  CHECK(chi2 < 255 + 5 * std::sqrt(510.0));

  const auto one = measure(g4(), {{0.3}, {1.1}}, 1, 0);
  REQUIRE(one.size() == 1);
  CHECK(one[0].count == 1);

  std::ostringstream out;
  write_histogram_csv(out, one);
  CHECK(out.str().rfind("bitstring,count,coloring,cut\n", 0) == 0);
}

TEST_CASE("brute_report") {
  CHECK(brute_report(g4(), 3)["optimal_cut"] == 5.0);
  CHECK(brute_report(Graph::complete(5), 3)["optimal_cut"] == 8.0);
  CHECK(brute_report(Graph::complete(3), 3)["optimal_cut"] == 3.0);
}

TEST_CASE("parse_theta") {
  CHECK(parse_theta("0.1, 0.2") == std::vector<double>{0.1, 0.2});
  CHECK(parse_theta("1 2\n3 4\n") == std::vector<double>{1, 2, 3, 4});
  CHECK(parse_theta(R"({"theta": [0.5, 1.5], "p": 1})") == std::vector<double>{0.5, 1.5});
  CHECK_THROWS(parse_theta("0.1,0.2,0.3"));
  CHECK_THROWS(parse_theta("0.1,abc"));
  CHECK_THROWS(parse_theta(""));
  CHECK_THROWS(parse_theta(R"({"p": 1})"));
}
