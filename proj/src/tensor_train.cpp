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

#include "tqaoa/tensor_train.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace tqaoa {

TensorTrain::TensorTrain(std::size_t nodes, std::vector<std::size_t> ranks)
    : nodes_(nodes), ranks_(std::move(ranks)) {
  if (ranks_.size() < 2) throw std::invalid_argument("tensor train needs at least one core");
  if (nodes_ == 0) throw std::invalid_argument("tensor train needs at least one node");
  if (ranks_.front() != 1 || ranks_.back() != 1) {
    throw std::invalid_argument("boundary ranks must be 1");
  }
  cores_.resize(ranks_.size() - 1);
  for (std::size_t k = 0; k < cores_.size(); ++k) {
    if (ranks_[k + 1] == 0) throw std::invalid_argument("ranks must be positive");
    cores_[k].assign(ranks_[k] * nodes_ * ranks_[k + 1], 0.0);
  }
}

void TensorTrain::check_index(std::span<const std::size_t> idx) const {
  if (idx.size() != dims()) {
    throw std::invalid_argument("multi-index has " + std::to_string(idx.size()) +
                                " entries, tensor has " + std::to_string(dims()) + " dims");
  }
  for (const auto i : idx) {
    if (i >= nodes_) {
      throw std::out_of_range("multi-index entry " + std::to_string(i) + " >= " +
                              std::to_string(nodes_));
    }
  }
}

TensorTrain random_tt(std::size_t dims, std::size_t nodes, std::size_t rank, Rng& rng) {
  if (dims < 1 || nodes < 2 || rank < 1) {
    throw std::invalid_argument("random_tt needs d >= 1, N >= 2, R >= 1");
  }
  std::vector<std::size_t> ranks(dims + 1, rank);
  ranks.front() = ranks.back() = 1;
  TensorTrain t(nodes, std::move(ranks));
  for (std::size_t k = 0; k < dims; ++k) {
    // 1 - u with u in [0, 1) lies in (0, 1]; rescale into (floor, 1].
    for (auto& v : t.core(k)) v = kInitFloor + (1.0 - kInitFloor) * (1.0 - rng.uniform());
  }
  return t;
}

namespace {

// Left interfaces: left[k] = G_1[:, i_1, :] ... G_k[:, i_k, :], size R_k.
std::vector<std::vector<double>> left_interfaces(const TensorTrain& t,
                                                 std::span<const std::size_t> idx) {
  const auto ranks = t.ranks();
  std::vector<std::vector<double>> left(t.dims() + 1);
  left[0] = {1.0};
  for (std::size_t k = 0; k < t.dims(); ++k) {
    left[k + 1].assign(ranks[k + 1], 0.0);
    for (std::size_t a = 0; a < ranks[k]; ++a)
      for (std::size_t b = 0; b < ranks[k + 1]; ++b)
        left[k + 1][b] += left[k][a] * t.at(k, a, idx[k], b);
  }
  return left;
}

// Right interfaces: right[k] = G_{k+1}[:, i_{k+1}, :] ... G_d[:, i_d, :], size R_k.
std::vector<std::vector<double>> right_interfaces(const TensorTrain& t,
                                                  std::span<const std::size_t> idx) {
  const auto ranks = t.ranks();
  const std::size_t d = t.dims();
  std::vector<std::vector<double>> right(d + 1);
  right[d] = {1.0};
  for (std::size_t k = d; k-- > 0;) {
    right[k].assign(ranks[k], 0.0);
    for (std::size_t a = 0; a < ranks[k]; ++a)
      for (std::size_t b = 0; b < ranks[k + 1]; ++b)
        right[k][a] += t.at(k, a, idx[k], b) * right[k + 1][b];
  }
  return right;
}

}  // namespace

double tt_value(const TensorTrain& t, std::span<const std::size_t> idx) {
  t.check_index(idx);
  return left_interfaces(t, idx).back()[0];
}

std::vector<std::vector<double>> right_marginals(const TensorTrain& t) {
  const auto ranks = t.ranks();
  const std::size_t d = t.dims();
  std::vector<std::vector<double>> z(d + 1);
  z[d] = {1.0};
  for (std::size_t k = d; k-- > 0;) {
    z[k].assign(ranks[k], 0.0);
    for (std::size_t a = 0; a < ranks[k]; ++a)
      for (std::size_t i = 0; i < t.nodes(); ++i)
        for (std::size_t b = 0; b < ranks[k + 1]; ++b) z[k][a] += t.at(k, a, i, b) * z[k + 1][b];
  }
  return z;
}

MultiIndex sample(const TensorTrain& t, Rng& rng, SampleDiagnostics* diag) {
  const auto z = right_marginals(t);
  return sample(t, z, rng, diag);
}

MultiIndex sample(const TensorTrain& t, std::span<const std::vector<double>> marginals, Rng& rng,
                  SampleDiagnostics* diag) {
  const auto ranks = t.ranks();
  const std::size_t d = t.dims();
  const std::size_t n = t.nodes();
  if (marginals.size() != d + 1) throw std::invalid_argument("marginals do not match tensor");

  MultiIndex idx(d);
  std::vector<double> phi{1.0};
  std::vector<double> cond(n);
  std::vector<double> next;
  for (std::size_t k = 0; k < d; ++k) {
    const auto& zr = marginals[k + 1];
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double q = 0.0;
      for (std::size_t a = 0; a < ranks[k]; ++a) {
        if (phi[a] == 0.0) continue;
        double row = 0.0;
        for (std::size_t b = 0; b < ranks[k + 1]; ++b) row += t.at(k, a, i, b) * zr[b];
        q += phi[a] * row;
      }
      cond[i] = (q > 0.0 && std::isfinite(q)) ? q : 0.0;
      total += cond[i];
    }

    std::size_t choice = 0;
    if (!(total > 0.0) || !std::isfinite(total)) {
      if (diag) ++diag->uniform_fallbacks;
      choice = static_cast<std::size_t>(rng.below(n));
    } else {
      const double u = rng.uniform() * total;
      double acc = 0.0;
      choice = n;
      for (std::size_t i = 0; i < n; ++i) {
        acc += cond[i];
        if (u < acc) {
          choice = i;
          break;
        }
      }
      if (choice == n) {
        // Rounding pushed u past the accumulated sum; take the last positive entry.
        choice = n - 1;
        while (cond[choice] == 0.0) --choice;
      }
    }
    idx[k] = choice;

    // phi <- phi^T G_k[:, choice, :], rescaled to unit max-norm; the
    // conditionals only depend on phi up to a positive factor.
    next.assign(ranks[k + 1], 0.0);
    double scale = 0.0;
    for (std::size_t a = 0; a < ranks[k]; ++a)
      for (std::size_t b = 0; b < ranks[k + 1]; ++b) next[b] += phi[a] * t.at(k, a, choice, b);
    for (const auto v : next) scale = std::max(scale, std::abs(v));
    if (scale > 0.0)
      for (auto& v : next) v /= scale;
    phi.swap(next);
  }
  return idx;
}

CoreGradients log_value_grad(const TensorTrain& t, std::span<const std::size_t> idx) {
  t.check_index(idx);
  const auto left = left_interfaces(t, idx);
  const double value = left.back()[0];
  if (!(value > 0.0)) {
    throw std::domain_error("log gradient needs a positive tensor value, got " +
                            std::to_string(value));
  }
  const auto right = right_interfaces(t, idx);
  const auto ranks = t.ranks();
  CoreGradients grad(t.dims());
  for (std::size_t k = 0; k < t.dims(); ++k) {
    grad[k].assign(t.core(k).size(), 0.0);
    for (std::size_t a = 0; a < ranks[k]; ++a)
      for (std::size_t b = 0; b < ranks[k + 1]; ++b)
        grad[k][(a * t.nodes() + idx[k]) * ranks[k + 1] + b] = left[k][a] * right[k + 1][b] / value;
  }
  return grad;
}

AscentReport ascent_step(TensorTrain& t, std::span<const MultiIndex> batch, double lambda,
                         std::size_t steps) {
  if (batch.empty()) throw std::invalid_argument("ascent needs a non-empty batch");
  for (const auto& idx : batch) t.check_index(idx);

  AscentReport report;
  const auto ranks = t.ranks();
  const std::size_t d = t.dims();
  CoreGradients total(d);
  for (std::size_t s = 0; s < steps; ++s) {
    for (std::size_t k = 0; k < d; ++k) total[k].assign(t.core(k).size(), 0.0);
    for (const auto& idx : batch) {
      const auto left = left_interfaces(t, idx);
      const auto right = right_interfaces(t, idx);
      double value = left.back()[0];
      if (!(value > kValueFloor)) {
        value = kValueFloor;
        ++report.clamped;
      }
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t a = 0; a < ranks[k]; ++a)
          for (std::size_t b = 0; b < ranks[k + 1]; ++b)
            total[k][(a * t.nodes() + idx[k]) * ranks[k + 1] + b] +=
                left[k][a] * right[k + 1][b] / value;
    }
    for (std::size_t k = 0; k < d; ++k) {
      auto core = t.core(k);
      for (std::size_t e = 0; e < core.size(); ++e) core[e] += lambda * total[k][e];
    }
  }
  return report;
}

void write_tt(std::ostream& out, const TensorTrain& t) {
  const auto old_precision = out.precision(17);
  out << "tt " << t.dims() << ' ' << t.nodes() << '\n';
  for (std::size_t k = 0; k < t.ranks().size(); ++k) out << (k ? " " : "") << t.ranks()[k];
  out << '\n';
  for (std::size_t k = 0; k < t.dims(); ++k) {
    const auto core = t.core(k);
    for (std::size_t e = 0; e < core.size(); ++e) out << (e ? " " : "") << core[e];
    out << '\n';
  }
  out.precision(old_precision);
}

TensorTrain read_tt(std::istream& in) {
  std::string tag;
  std::size_t d = 0;
  std::size_t n = 0;
  if (!(in >> tag >> d >> n) || tag != "tt" || d == 0) {
    throw std::runtime_error("bad tensor-train checkpoint header");
  }
  std::vector<std::size_t> ranks(d + 1);
  for (auto& r : ranks)
    if (!(in >> r)) throw std::runtime_error("truncated rank list in checkpoint");
  TensorTrain t(n, std::move(ranks));
  for (std::size_t k = 0; k < d; ++k)
    for (auto& v : t.core(k))
      if (!(in >> v)) throw std::runtime_error("truncated core data in checkpoint");
  return t;
}

}  // namespace tqaoa
