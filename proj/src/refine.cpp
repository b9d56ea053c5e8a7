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

#include "tqaoa/refine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tqaoa/rng.hpp"

namespace tqaoa {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

struct BudgetExhausted {};

class CountingObjective {
 public:
  CountingObjective(const ContinuousObjective& f, std::size_t budget) : f_(f), budget_(budget) {}

  double operator()(const std::vector<double>& x) {
    if (evals_ >= budget_) throw BudgetExhausted{};
    std::vector<double> wrapped(x.size());
    std::transform(x.begin(), x.end(), wrapped.begin(), wrap_angle);
    const double v = f_(wrapped);
    ++evals_;
    if (!std::isfinite(v)) {
      throw std::runtime_error("refine: objective returned a non-finite value at evaluation " +
                               std::to_string(evals_));
    }
    if (evals_ == 1 || v < best_value_) {
      best_value_ = v;
      best_ = x;
    }
    return v;
  }

  std::size_t evals() const { return evals_; }
  const std::vector<double>& best() const { return best_; }
  double best_value() const { return best_value_; }

 private:
  const ContinuousObjective& f_;
  std::size_t budget_;
  std::size_t evals_ = 0;
  std::vector<double> best_;
  double best_value_ = 0.0;
};

}  // namespace

void RefineConfig::validate(std::size_t dims) const {
  if (max_evals < dims + 2) {
    throw std::invalid_argument("max_evals must be at least dims + 2");
  }
  if (!(initial_step > 0.0)) throw std::invalid_argument("initial_step must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
}

double wrap_angle(double x) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(x, two_pi);
  if (r < 0.0) r += two_pi;
  return r >= two_pi ? 0.0 : r;
}

RefineResult refine(const ContinuousObjective& objective, std::span<const double> start,
                    const RefineConfig& config) {
  const std::size_t dims = start.size();
  if (dims == 0) throw std::invalid_argument("refine needs a non-empty start point");
  config.validate(dims);

  CountingObjective f(objective, config.max_evals);
  Rng rng(config.seed);

  f(std::vector<double>(start.begin(), start.end()));
  RefineResult result;

  std::vector<std::vector<double>> simplex(dims + 1, std::vector<double>(dims));
  std::vector<double> fx(dims + 1);
  std::vector<std::size_t> order(dims + 1);
  std::vector<double> centroid(dims), xr(dims), xe(dims), xc(dims);

  auto along = [&](const std::vector<double>& from, const std::vector<double>& to, double t,
                   std::vector<double>& out) {
    for (std::size_t j = 0; j < dims; ++j) out[j] = centroid[j] + t * (to[j] - from[j]);
  };

  try {
    for (std::size_t round = 0;; ++round) {
      const double round_start = f.best_value();
      simplex[0] = f.best();
      fx[0] = f.best_value();
      for (std::size_t j = 0; j < dims; ++j) {
        const double sign = round == 0 || rng.uniform() < 0.5 ? 1.0 : -1.0;
        simplex[j + 1] = simplex[0];
        simplex[j + 1][j] += sign * config.initial_step;
        fx[j + 1] = f(simplex[j + 1]);
      }

      while (true) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
        const std::size_t lo = order.front();
        const std::size_t hi = order.back();
        const std::size_t second = order[dims - 1];
        if (fx[hi] - fx[lo] <= config.tol) break;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t v = 0; v <= dims; ++v) {
          if (v == hi) continue;
          for (std::size_t j = 0; j < dims; ++j) centroid[j] += simplex[v][j];
        }
        for (auto& c : centroid) c /= static_cast<double>(dims);

        along(simplex[hi], centroid, kReflect, xr);
        const double fr = f(xr);
        if (fr < fx[lo]) {
          along(simplex[hi], centroid, kReflect * kExpand, xe);
          const double fe = f(xe);
          if (fe < fr) {
            simplex[hi] = xe;
            fx[hi] = fe;
          } else {
            simplex[hi] = xr;
            fx[hi] = fr;
          }
          continue;
        }
        if (fr < fx[second]) {
          simplex[hi] = xr;
          fx[hi] = fr;
          continue;
        }
        // Outside contraction toward xr, or inside contraction toward the worst vertex.
        const bool outside = fr < fx[hi];
        if (outside) {
          along(simplex[hi], centroid, kReflect * kContract, xc);
        } else {
          along(simplex[hi], centroid, -kContract, xc);
        }
        const double fc = f(xc);
        if (fc < (outside ? fr : fx[hi])) {
          simplex[hi] = xc;
          fx[hi] = fc;
          continue;
        }
        for (std::size_t v = 0; v <= dims; ++v) {
          if (v == lo) continue;
          for (std::size_t j = 0; j < dims; ++j)
            simplex[v][j] = simplex[lo][j] + kShrink * (simplex[v][j] - simplex[lo][j]);
          fx[v] = f(simplex[v]);
        }
      }

      if (!(f.best_value() < round_start - config.tol)) break;
      ++result.restarts;
    }
  } catch (const BudgetExhausted&) {
  }

  result.point.resize(dims);
  std::transform(f.best().begin(), f.best().end(), result.point.begin(), wrap_angle);
  result.value = f.best_value();
  result.evaluations = f.evals();
  return result;
}

}  // namespace tqaoa
