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

#include "tqaoa/protes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace tqaoa {

void ProtesConfig::validate() const {
  if (rank < 1) throw std::invalid_argument("rank R must be >= 1");
  if (samples < 1) throw std::invalid_argument("samples K must be >= 1");
  if (elites < 1 || elites > samples) {
    throw std::invalid_argument("elites k must satisfy 1 <= k <= K (k = " +
                                std::to_string(elites) + ", K = " + std::to_string(samples) +
                                ")");
  }
  if (nodes < 2) throw std::invalid_argument("nodes N must be >= 2");
  if (budget < samples) {
    throw std::invalid_argument("budget m = " + std::to_string(budget) +
                                " is smaller than one batch of K = " + std::to_string(samples));
  }
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw std::invalid_argument("learning rate must be positive");
  }
}

double ParameterGrid::node_value(std::size_t i) const {
  return 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(nodes);
}

ParameterVector ParameterGrid::to_params(std::span<const std::size_t> idx) const {
  if (idx.size() != dims || dims == 0 || dims % 2 != 0) {
    throw std::invalid_argument("grid index must have 2p entries");
  }
  std::vector<double> flat(dims);
  for (std::size_t j = 0; j < dims; ++j) {
    if (idx[j] >= nodes) throw std::out_of_range("grid index out of range");
    flat[j] = node_value(idx[j]);
  }
  return ParameterVector::unflatten(flat);
}

ParameterVector index_to_params(std::span<const std::size_t> idx, const ParameterGrid& grid) {
  return grid.to_params(idx);
}

EvaluationPlan duplicate_policy(std::span<const MultiIndex> samples) {
  EvaluationPlan plan;
  plan.slot.reserve(samples.size());
  std::map<MultiIndex, std::size_t> seen;
  for (const auto& s : samples) {
    auto [it, inserted] = seen.try_emplace(s, plan.unique.size());
    if (inserted) plan.unique.push_back(s);
    plan.slot.push_back(it->second);
  }
  return plan;
}

OptimizationTrace optimize(const Objective& objective, std::size_t dims,
                           const ProtesConfig& config) {
  config.validate();
  if (dims < 1) throw std::invalid_argument("optimize needs at least one dimension");

  Rng rng(config.seed);
  TensorTrain tt = random_tt(dims, config.nodes, config.rank, rng);

  // Values are cached across iterations; a repeat never costs another call.
  std::map<MultiIndex, double> cache;
  OptimizationTrace trace;
  trace.best_value = std::numeric_limits<double>::infinity();

  std::vector<MultiIndex> batch(config.samples);
  std::vector<double> values;
  std::vector<std::size_t> order;
  std::vector<MultiIndex> elites;
  SampleDiagnostics diag;

  std::size_t stalled = 0;
  for (std::size_t it = 0; trace.evaluations < config.budget; ++it) {
    const auto marginals = right_marginals(tt);
    for (auto& s : batch) s = sample(tt, marginals, rng, &diag);

    // Distinct unseen indices are evaluated in sample order while budget
    // remains; samples left without a value drop out of this batch.
    const auto plan = duplicate_policy(batch);
    std::vector<std::optional<double>> unique_values(plan.unique.size());
    const std::size_t before = trace.evaluations;
    for (std::size_t u = 0; u < plan.unique.size(); ++u) {
      const auto& idx = plan.unique[u];
      if (auto hit = cache.find(idx); hit != cache.end()) {
        unique_values[u] = hit->second;
        continue;
      }
      if (trace.evaluations == config.budget) continue;
      const double v = objective(idx);
      ++trace.evaluations;
      if (!std::isfinite(v)) {
        throw std::runtime_error("objective returned a non-finite value at evaluation " +
                                 std::to_string(trace.evaluations));
      }
      cache.emplace(idx, v);
      unique_values[u] = v;
    }
    stalled = trace.evaluations == before ? stalled + 1 : 0;

    values.clear();
    order.clear();
    double sum = 0.0;
    for (std::size_t s = 0; s < batch.size(); ++s) {
      const auto& v = unique_values[plan.slot[s]];
      if (!v) continue;
      order.push_back(s);
      values.push_back(*v);
      sum += *v;
      if (*v < trace.best_value) {
        trace.best_value = *v;
        trace.best_index = batch[s];
      }
    }

    // Stable sort of (value, sample position) keeps ties in sample order.
    std::vector<std::size_t> rank(values.size());
    std::iota(rank.begin(), rank.end(), std::size_t{0});
    std::stable_sort(rank.begin(), rank.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    elites.clear();
    for (std::size_t e = 0; e < std::min(config.elites, rank.size()); ++e)
      elites.push_back(batch[order[rank[e]]]);

    if (!elites.empty()) {
      trace.ascent_clamps +=
          ascent_step(tt, elites, config.learning_rate, config.ascent_steps).clamped;
    }

    trace.iterations.push_back({it + 1, trace.evaluations,
                                values.empty() ? 0.0 : sum / static_cast<double>(values.size()), trace.best_value,
                                trace.best_index});
    if (stalled >= kMaxStalledIterations) break;
  }
  trace.sampling_fallbacks = diag.uniform_fallbacks;
  return trace;
}

void write_trace_csv(std::ostream& out, const OptimizationTrace& trace) {
  const auto old_precision = out.precision(17);
  out << "iteration,evals,best_value\n";
  for (const auto& r : trace.iterations)
    out << r.iteration << ',' << r.evaluations << ',' << r.best_value << '\n';
  out.precision(old_precision);
}

}  // namespace tqaoa
