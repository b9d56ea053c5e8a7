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
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "tqaoa/simulator.hpp"
#include "tqaoa/tensor_train.hpp"

namespace tqaoa {

/// Hyperparameters of the sample / evaluate / select / ascend loop.
struct ProtesConfig {
  std::size_t rank = 5;           // R
  std::size_t samples = 20;       // K, candidates per iteration
  std::size_t elites = 10;        // k, retained per iteration
  std::size_t ascent_steps = 5;   // k_gd
  double learning_rate = 0.05;    // lambda
  std::size_t nodes = 100;        // N, grid nodes per axis
  std::size_t budget = 1000;      // m, objective evaluations
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on violated invariants.
  void validate() const;
};

/// Uniform grid over [0, 2pi)^d; axes ordered (gamma_1..gamma_p, beta_1..beta_p).
struct ParameterGrid {
  std::size_t dims = 0;
  std::size_t nodes = 0;

  double node_value(std::size_t i) const;
  ParameterVector to_params(std::span<const std::size_t> idx) const;
};

ParameterVector index_to_params(std::span<const std::size_t> idx, const ParameterGrid& grid);

/// Unique multi-indices of a batch and, for each sample, the slot of its
/// unique representative (first occurrence order).
struct EvaluationPlan {
  std::vector<MultiIndex> unique;
  std::vector<std::size_t> slot;
};

EvaluationPlan duplicate_policy(std::span<const MultiIndex> samples);

struct IterationRecord {
  std::size_t iteration = 0;
  std::size_t evaluations = 0;   // cumulative objective calls
  double batch_mean = 0.0;       // mean objective over the K samples
  double best_value = 0.0;       // best so far
  MultiIndex best_index;
};

struct OptimizationTrace {
  std::vector<IterationRecord> iterations;
  MultiIndex best_index;
  double best_value = 0.0;
  std::size_t evaluations = 0;
  std::size_t sampling_fallbacks = 0;
  std::size_t ascent_clamps = 0;
};

/// The loop stops early once this many consecutive iterations sampled only
/// already-evaluated indices (the distribution has collapsed).
inline constexpr std::size_t kMaxStalledIterations = 100;

/// Black-box objective over grid multi-indices; lower is better.
using Objective = std::function<double(std::span<const std::size_t>)>;

/// Iterates until m distinct indices have been evaluated. Each iteration
/// samples K indices from the current tensor train, evaluates the distinct
/// unseen ones (cached values are reused for free), keeps the k smallest
/// (stable by sample order) and runs k_gd ascent steps on them.
OptimizationTrace optimize(const Objective& objective, std::size_t dims,
                           const ProtesConfig& config);

/// CSV: iteration,evals,best_value.
void write_trace_csv(std::ostream& out, const OptimizationTrace& trace);

}  // namespace tqaoa
