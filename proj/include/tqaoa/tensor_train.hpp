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
#include <iosfwd>
#include <span>
#include <vector>

#include "tqaoa/rng.hpp"

namespace tqaoa {

/// Grid multi-index (i_1, ..., i_d), each entry in [0, N).
using MultiIndex = std::vector<std::size_t>;

/// Lower bound of the uniform draw used to initialize cores.
inline constexpr double kInitFloor = 1e-6;
/// Value substituted for a collapsed (non-positive) tensor entry during ascent.
inline constexpr double kValueFloor = 1e-12;

/// Tensor-train with d cores; core k has shape (R_{k-1}, N, R_k) stored
/// row-major, i.e. entry (a, i, b) at a * N * R_k + i * R_k + b.
/// Boundary ranks R_0 = R_d = 1.
class TensorTrain {
 public:
  TensorTrain(std::size_t nodes, std::vector<std::size_t> ranks);

  std::size_t dims() const noexcept { return cores_.size(); }
  std::size_t nodes() const noexcept { return nodes_; }
  /// d + 1 entries, ranks().front() == ranks().back() == 1.
  std::span<const std::size_t> ranks() const noexcept { return ranks_; }

  std::span<const double> core(std::size_t k) const { return cores_.at(k); }
  std::span<double> core(std::size_t k) { return cores_.at(k); }

  double& at(std::size_t k, std::size_t a, std::size_t i, std::size_t b) {
    return cores_[k][(a * nodes_ + i) * ranks_[k + 1] + b];
  }
  double at(std::size_t k, std::size_t a, std::size_t i, std::size_t b) const {
    return cores_[k][(a * nodes_ + i) * ranks_[k + 1] + b];
  }

  void check_index(std::span<const std::size_t> idx) const;

  friend bool operator==(const TensorTrain&, const TensorTrain&) = default;

 private:
  std::size_t nodes_;
  std::vector<std::size_t> ranks_;
  std::vector<std::vector<double>> cores_;
};

/// Cores with entries drawn from Uniform(kInitFloor, 1]; internal ranks R.
TensorTrain random_tt(std::size_t dims, std::size_t nodes, std::size_t rank, Rng& rng);

/// Chained product G_1[:, i_1, :] ... G_d[:, i_d, :].
double tt_value(const TensorTrain& t, std::span<const std::size_t> idx);

/// Z[k] (size R_k) for k = 0..d: Z[d] = {1}, Z[k] = (sum_i G_{k+1}[:, i, :]) Z[k+1].
/// Z[0][0] is the full tensor sum.
std::vector<std::vector<double>> right_marginals(const TensorTrain& t);

struct SampleDiagnostics {
  /// Number of conditionals that were all non-positive after clamping and
  /// fell back to uniform.
  std::size_t uniform_fallbacks = 0;
};

/// Draws i_1..i_d from sequential univariate conditionals. Negative
/// conditional entries are clamped to zero before normalizing.
MultiIndex sample(const TensorTrain& t, Rng& rng, SampleDiagnostics* diag = nullptr);

/// Same as sample() with precomputed right marginals (valid until t changes).
MultiIndex sample(const TensorTrain& t, std::span<const std::vector<double>> marginals, Rng& rng,
                  SampleDiagnostics* diag = nullptr);

/// Core-shaped gradient container.
using CoreGradients = std::vector<std::vector<double>>;

/// d ln P[idx] / d G_k for every core. Throws if P[idx] <= 0.
CoreGradients log_value_grad(const TensorTrain& t, std::span<const std::size_t> idx);

struct AscentReport {
  /// Count of (step, batch index) pairs whose value had to be floored.
  std::size_t clamped = 0;
};

/// k_gd iterations of G <- G + lambda * grad sum_b ln P[batch_b].
AscentReport ascent_step(TensorTrain& t, std::span<const MultiIndex> batch, double lambda,
                         std::size_t steps);

/// Text checkpoint: "tt <d> <N>", a line of d+1 ranks, then each core's
/// entries row-major, one core per line, 17 significant digits.
void write_tt(std::ostream& out, const TensorTrain& t);
TensorTrain read_tt(std::istream& in);

}  // namespace tqaoa
