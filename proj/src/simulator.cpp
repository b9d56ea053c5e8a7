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

#include "tqaoa/simulator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tqaoa {

namespace {

constexpr double kAncillaTolerance = 1e-12;

inline std::uint64_t bit(std::size_t q) { return std::uint64_t{1} << q; }

}  // namespace

Statevector::Statevector(std::size_t data_qubits, std::size_t ancilla_qubits)
    : data_qubits_(data_qubits), ancilla_qubits_(ancilla_qubits) {
  if (num_qubits() == 0 || num_qubits() > kMaxQubits) {
    throw std::invalid_argument("qubit count " + std::to_string(num_qubits()) +
                                " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
  amps_.assign(std::size_t{1} << num_qubits(), complex_t{0.0, 0.0});
  amps_[0] = 1.0;
}

void Statevector::check_qubit(std::size_t q) const {
  if (q >= num_qubits()) {
    throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " +
                            std::to_string(num_qubits()) + " qubits");
  }
}

double Statevector::norm_squared() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return acc;
}

double Statevector::ancilla_residual() const {
  const std::uint64_t data_dim = std::uint64_t{1} << data_qubits_;
  double acc = 0.0;
  for (std::uint64_t i = data_dim; i < amps_.size(); ++i) acc += std::norm(amps_[i]);
  return acc;
}

void Statevector::apply_x(std::size_t q) {
  check_qubit(q);
  const std::uint64_t m = bit(q);
  for (std::uint64_t i = 0; i < amps_.size(); ++i)
    if (!(i & m)) std::swap(amps_[i], amps_[i | m]);
}

void Statevector::apply_h(std::size_t q) {
  check_qubit(q);
  const std::uint64_t m = bit(q);
  const double s = 1.0 / std::sqrt(2.0);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (i & m) continue;
    const complex_t a0 = amps_[i];
    const complex_t a1 = amps_[i | m];
    amps_[i] = s * (a0 + a1);
    amps_[i | m] = s * (a0 - a1);
  }
}

void Statevector::apply_rx(std::size_t q, double theta) {
  check_qubit(q);
  const std::uint64_t m = bit(q);
  const double c = std::cos(theta / 2.0);
  const complex_t ms{0.0, -std::sin(theta / 2.0)};
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (i & m) continue;
    const complex_t a0 = amps_[i];
    const complex_t a1 = amps_[i | m];
    amps_[i] = c * a0 + ms * a1;
    amps_[i | m] = ms * a0 + c * a1;
  }
}

void Statevector::apply_cx(std::size_t control, std::size_t target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) throw std::invalid_argument("cx control equals target");
  const std::uint64_t cm = bit(control);
  const std::uint64_t tm = bit(target);
  for (std::uint64_t i = 0; i < amps_.size(); ++i)
    if ((i & cm) && !(i & tm)) std::swap(amps_[i], amps_[i | tm]);
}

void Statevector::apply_ccx(std::size_t c0, std::size_t c1, std::size_t target) {
  check_qubit(c0);
  check_qubit(c1);
  check_qubit(target);
  if (c0 == c1 || c0 == target || c1 == target) {
    throw std::invalid_argument("ccx qubits must be distinct");
  }
  const std::uint64_t cm = bit(c0) | bit(c1);
  const std::uint64_t tm = bit(target);
  for (std::uint64_t i = 0; i < amps_.size(); ++i)
    if ((i & cm) == cm && !(i & tm)) std::swap(amps_[i], amps_[i | tm]);
}

void Statevector::apply_controlled_phase(std::span<const std::size_t> controls,
                                         std::size_t target, double phi) {
  check_qubit(target);
  std::uint64_t mask = bit(target);
  for (const auto c : controls) {
    check_qubit(c);
    if (mask & bit(c)) throw std::invalid_argument("controlled phase qubits must be distinct");
    mask |= bit(c);
  }
  const complex_t phase = std::polar(1.0, phi);
  for (std::uint64_t i = 0; i < amps_.size(); ++i)
    if ((i & mask) == mask) amps_[i] *= phase;
}

double fidelity(const Statevector& a, const Statevector& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("fidelity: dimension mismatch");
  complex_t acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.dimension(); ++i) acc += std::conj(a[i]) * b[i];
  return std::abs(acc);
}

const char* to_string(Backend b) {
  return b == Backend::kDiagonal ? "diagonal" : "gate";
}

Backend backend_from_string(std::string_view s) {
  if (s == "diagonal") return Backend::kDiagonal;
  if (s == "gate") return Backend::kGateLevel;
  throw std::invalid_argument("unknown backend '" + std::string(s) + "' (diagonal|gate)");
}

std::vector<double> ParameterVector::flatten() const {
  std::vector<double> flat(gammas);
  flat.insert(flat.end(), betas.begin(), betas.end());
  return flat;
}

ParameterVector ParameterVector::unflatten(std::span<const double> flat) {
  if (flat.empty() || flat.size() % 2 != 0) {
    throw std::invalid_argument("parameter vector needs an even, positive length");
  }
  const std::size_t p = flat.size() / 2;
  return {{flat.begin(), flat.begin() + p}, {flat.begin() + p, flat.end()}};
}

Statevector prepare_initial(std::size_t n, Backend backend) {
  if (n == 0) throw std::invalid_argument("need at least one vertex");
  if (2 * n + 2 > kMaxQubits) throw std::invalid_argument("too many vertices for dense simulation");
  Statevector state(2 * n, backend == Backend::kGateLevel ? 2 : 0);
  const std::uint64_t data_dim = std::uint64_t{1} << (2 * n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(data_dim));
  auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < data_dim; ++i) amps[i] = amp;
  return state;
}

void apply_mixer(Statevector& state, double beta) {
  for (std::size_t q = 0; q < state.data_qubits(); ++q) state.apply_rx(q, 2.0 * beta);
}

void apply_phase_diagonal(Statevector& state, const CostDiagonal& cd, double gamma) {
  const std::uint64_t data_dim = std::uint64_t{1} << state.data_qubits();
  if (cd.dimension() != data_dim) {
    throw std::invalid_argument("cost diagonal dimension " + std::to_string(cd.dimension()) +
                                " does not match data register " + std::to_string(data_dim));
  }
  auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    amps[i] *= std::polar(1.0, -0.5 * gamma * cd.values[i & (data_dim - 1)]);
  }
}

void apply_phase_gate_level(Statevector& state, const Graph& g, double gamma) {
  const std::size_t n = g.num_vertices();
  if (state.data_qubits() != 2 * n || state.ancilla_qubits() != 2) {
    throw std::invalid_argument("gate-level phase needs 2n color qubits plus 2 ancillas");
  }
  if (state.ancilla_residual() > kAncillaTolerance) {
    throw std::invalid_argument("ancillas must be |00> before the phase separator");
  }
  const std::size_t a0 = 2 * n;
  const std::size_t a1 = 2 * n + 1;
  const std::array<std::size_t, 2> ancillas{a0, a1};

  for (const auto& e : g.edges()) {
    // Each block adds exp(-i w gamma) to the field pairs it flags, i.e. the
    // relative phase between same-color and different-color pairs.
    const double phi = -e.weight * gamma;
    const std::size_t hi_i = high_qubit(e.u), lo_i = low_qubit(e.u);
    const std::size_t hi_j = high_qubit(e.v), lo_j = low_qubit(e.v);

    // Same-field term: field_j ^= field_i, flag 00 via X, phase, uncompute.
    state.apply_cx(hi_i, hi_j);
    state.apply_cx(lo_i, lo_j);
    state.apply_x(hi_j);
    state.apply_x(lo_j);
    {
      const std::array<std::size_t, 1> ctrl{hi_j};
      state.apply_controlled_phase(ctrl, lo_j, phi);
    }
    state.apply_x(lo_j);
    state.apply_x(hi_j);
    state.apply_cx(lo_i, lo_j);
    state.apply_cx(hi_i, hi_j);

    // Aliasing terms: fields (10, 11) then (11, 10). The X flips the low
    // bit of whichever vertex holds 10 so that both fields read 11.
    for (const std::size_t flip : {lo_i, lo_j}) {
      state.apply_x(flip);
      state.apply_ccx(hi_i, lo_i, a0);
      state.apply_ccx(hi_j, lo_j, a1);
      state.apply_controlled_phase(ancillas, lo_j, phi);
      state.apply_ccx(hi_j, lo_j, a1);
      state.apply_ccx(hi_i, lo_i, a0);
      state.apply_x(flip);
    }
  }
}

QaoaInstance::QaoaInstance(Graph graph, std::size_t depth, Backend backend)
    : graph_(std::move(graph)), cost_(build_cost_diagonal(graph_)), depth_(depth),
      backend_(backend) {
  if (depth_ == 0) throw std::invalid_argument("QAOA depth must be at least 1");
}

Statevector QaoaInstance::run(const ParameterVector& theta) const {
  if (theta.gammas.size() != depth_ || theta.betas.size() != depth_) {
    throw std::invalid_argument("parameter depth " + std::to_string(theta.gammas.size()) + "/" +
                                std::to_string(theta.betas.size()) +
                                " does not match circuit depth " + std::to_string(depth_));
  }
  Statevector state = prepare_initial(graph_.num_vertices(), backend_);
  for (std::size_t k = 0; k < depth_; ++k) {
    if (backend_ == Backend::kDiagonal) {
      apply_phase_diagonal(state, cost_, theta.gammas[k]);
    } else {
      apply_phase_gate_level(state, graph_, theta.gammas[k]);
    }
    apply_mixer(state, theta.betas[k]);
  }
  return state;
}

double QaoaInstance::energy(const ParameterVector& theta) const {
  return expectation(run(theta), cost_);
}

double expectation(const Statevector& state, const CostDiagonal& cd) {
  const std::uint64_t data_dim = std::uint64_t{1} << state.data_qubits();
  if (cd.dimension() != data_dim) {
    throw std::invalid_argument("expectation: cost diagonal does not match data register");
  }
  const auto amps = state.amplitudes();
  double acc = 0.0;
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    acc += std::norm(amps[i]) * cd.values[i & (data_dim - 1)];
  }
  return acc;
}

std::map<std::uint64_t, std::uint64_t> sample_counts(const Statevector& state,
                                                     std::size_t shots, Rng& rng) {
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  const auto amps = state.amplitudes();
  std::vector<double> cdf(amps.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    acc += std::norm(amps[i]);
    cdf[i] = acc;
  }
  const std::uint64_t data_mask = (std::uint64_t{1} << state.data_qubits()) - 1;
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::size_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    const auto idx = static_cast<std::uint64_t>(it - cdf.begin());
    ++counts[idx & data_mask];
  }
  return counts;
}

}  // namespace tqaoa
