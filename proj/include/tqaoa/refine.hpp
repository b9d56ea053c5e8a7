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
#include <span>
#include <vector>

namespace tqaoa {

struct RefineConfig {
  std::size_t max_evals = 10'000;
  double initial_step = 0.1;  // radians
  double tol = 1e-10;         // simplex value spread
  std::uint64_t seed = 0;     // orientation of restart simplices

  void validate(std::size_t dims) const;
};

struct RefineResult {
  std::vector<double> point;  // wrapped into [0, 2pi)
  double value = 0.0;
  std::size_t evaluations = 0;
  std::size_t restarts = 0;
};

using ContinuousObjective = std::function<double(std::span<const double>)>;

/// Maps x into [0, 2pi).
double wrap_angle(double x);

/// Nelder-Mead (reflection 1, expansion 2, contraction 0.5, shrink 0.5)
/// from `start` with an axis-aligned initial simplex of size initial_step.
/// Every trial point is wrapped modulo 2pi before evaluation. After the
/// simplex spread drops below tol, the search restarts around the incumbent
/// with a sign-randomized simplex while budget remains and the previous
/// round improved. The returned value never exceeds objective(start).
RefineResult refine(const ContinuousObjective& objective, std::span<const double> start,
                    const RefineConfig& config);

}  // namespace tqaoa
