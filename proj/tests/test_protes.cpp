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
#include <set>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "tqaoa/protes.hpp"

using namespace tqaoa;

namespace {

const MultiIndex kTarget{3, 7, 0, 9, 5, 2};

double quadratic(std::span<const std::size_t> idx) {
  double s = 0.0;
  for (std::size_t j = 0; j < idx.size(); ++j) {
    const double d = static_cast<double>(idx[j]) - static_cast<double>(kTarget[j]);
    s += d * d;
  }
  return s;
}

ProtesConfig benchmark_config(std::uint64_t seed) {
  ProtesConfig c;
  c.rank = 2;
  c.samples = 30;
  c.elites = 1;
  c.ascent_steps = 20;
  c.learning_rate = 100.0;
  c.nodes = 10;
  c.budget = 1000;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("grid node values") {
  const ParameterGrid grid{2, 100};
  CHECK(grid.node_value(0) == 0.0);
  CHECK(grid.node_value(50) == doctest::Approx(std::numbers::pi).epsilon(1e-15));
  CHECK(grid.node_value(25) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  const MultiIndex idx{25, 50};
  const auto p = index_to_params(idx, grid);
  CHECK(p.gammas[0] == grid.node_value(25));
  CHECK(p.betas[0] == grid.node_value(50));
  CHECK_THROWS(grid.to_params(MultiIndex{25}));
  CHECK_THROWS(grid.to_params(MultiIndex{25, 100}));
}

TEST_CASE("duplicate_policy") {
  const std::vector<MultiIndex> same(5, MultiIndex{1, 2});
  const auto p1 = duplicate_policy(same);
  CHECK(p1.unique.size() == 1);
  CHECK(p1.slot == std::vector<std::size_t>(5, 0));

  const std::vector<MultiIndex> distinct{{0}, {1}, {2}};
  CHECK(duplicate_policy(distinct).unique.size() == 3);

  const std::vector<MultiIndex> mixed{{4}, {1}, {4}, {2}, {1}};
  const auto p3 = duplicate_policy(mixed);
  CHECK(p3.unique == std::vector<MultiIndex>{{4}, {1}, {2}});
  CHECK(p3.slot == std::vector<std::size_t>{0, 1, 0, 2, 1});
}

TEST_CASE("config validation") {
  ProtesConfig c;
  CHECK_NOTHROW(c.validate());
  auto bad = c;
  bad.elites = bad.samples + 1;
  CHECK_THROWS(bad.validate());
  bad = c;
  bad.budget = c.samples - 1;
  CHECK_THROWS(bad.validate());
  bad = c;
  bad.rank = 0;
  CHECK_THROWS(bad.validate());
  bad = c;
  bad.nodes = 1;
  CHECK_THROWS(bad.validate());
  bad = c;
  bad.learning_rate = 0.0;
  CHECK_THROWS(bad.validate());
}

TEST_CASE("constant objective") {
  ProtesConfig c;
  c.nodes = 5;
  c.budget = 100;
  const auto tr = optimize([](std::span<const std::size_t>) { return 2.5; }, 3, c);
  CHECK(tr.best_value == 2.5);
  CHECK(tr.best_index.size() == 3);
  CHECK(tr.evaluations <= 100);
}

TEST_CASE("property: budget, cache and monotone trace") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    std::set<MultiIndex> seen;
    std::size_t calls = 0, repeats = 0;
    auto c = benchmark_config(seed);
    c.budget = 300;
    const auto tr = optimize(
        [&](std::span<const std::size_t> idx) {
          ++calls;
          repeats += !seen.emplace(idx.begin(), idx.end()).second;
          return quadratic(idx);
        },
        6, c);
    CHECK(calls == tr.evaluations);
    CHECK(calls <= c.budget);
    CHECK(repeats == 0);
    CHECK(tr.best_value == quadratic(tr.best_index));
    double prev = INFINITY;
    std::size_t prev_evals = 0;
    for (const auto& r : tr.iterations) {
      CHECK(r.best_value <= prev);
      CHECK(r.evaluations >= prev_evals);
      CHECK(r.evaluations <= c.budget);
      prev = r.best_value;
      prev_evals = r.evaluations;
    }
  }
}

TEST_CASE("fixed seed is deterministic") {
  const auto a = optimize(quadratic, 6, benchmark_config(4));
  const auto b = optimize(quadratic, 6, benchmark_config(4));
  CHECK(a.best_index == b.best_index);
  CHECK(a.evaluations == b.evaluations);
  REQUIRE(a.iterations.size() == b.iterations.size());
  for (std::size_t i = 0; i < a.iterations.size(); ++i)
    CHECK(a.iterations[i].best_value == b.iterations[i].best_value);
}

TEST_CASE("separable quadratic benchmark finds the exact minimizer") {
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    hits += optimize(quadratic, 6, benchmark_config(seed)).best_index == kTarget;
  CHECK(hits >= 9);
}

TEST_CASE("non-finite objective is rejected") {
  ProtesConfig c;
  c.nodes = 4;
  c.budget = 40;
  CHECK_THROWS_AS(optimize([](std::span<const std::size_t>) { return NAN; }, 2, c),
                  std::runtime_error);
  CHECK_THROWS(optimize(quadratic, 0, c));
}

TEST_CASE("G4 p=4 grid search reaches ratio 0.78") {
  const Graph g = tqaoa::testing::g4();
  const QaoaInstance inst(g, 4);
  ProtesConfig c;
  c.seed = 1;
  const ParameterGrid grid{8, c.nodes};
  const auto tr = optimize(
      [&](std::span<const std::size_t> idx) { return inst.energy(grid.to_params(idx)); }, 8, c);
  CHECK(tr.evaluations == 1000);
  CHECK(approximation_ratio(cut_from_energy(tr.best_value, g), 5.0).ratio >= 0.78);
}

TEST_CASE("trace CSV") {
  OptimizationTrace tr;
  tr.iterations.push_back({1, 20, 3.0, 1.5, {0}});
  std::ostringstream out;
  write_trace_csv(out, tr);
  CHECK(out.str() == "iteration,evals,best_value\n1,20,1.5\n");
}
