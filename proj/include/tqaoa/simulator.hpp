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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "tqaoa/graph.hpp"
#include "tqaoa/qaoa_model.hpp"
#include "tqaoa/rng.hpp"

namespace tqaoa {

using complex_t = std::complex<double>;

/// Largest register (data + ancilla qubits) the dense simulator allocates.
inline constexpr std::size_t kMaxQubits = 28;

/// Dense statevector over `data_qubits` followed by `ancilla_qubits`.
///
/// Qubit q corresponds to bit q of the amplitude index; ancillas occupy the
/// most significant positions so data indexing is the same with or without
/// them.
class Statevector {
 public:
  /// |0...0>.
  explicit Statevector(std::size_t data_qubits, std::size_t ancilla_qubits = 0);

  std::size_t num_qubits() const noexcept { return data_qubits_ + ancilla_qubits_; }
  std::size_t data_qubits() const noexcept { return data_qubits_; }
  std::size_t ancilla_qubits() const noexcept { return ancilla_qubits_; }
  std::size_t dimension() const noexcept { return amps_.size(); }

  std::span<const complex_t> amplitudes() const noexcept { return amps_; }
  std::span<complex_t> amplitudes() noexcept { return amps_; }
  const complex_t& operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;

  /// Total probability on indices whose ancilla bits are not all zero.
  double ancilla_residual() const;

  // Gate primitives. All act in place and validate qubit indices.
  void apply_x(std::size_t q);
  void apply_h(std::size_t q);
  /// exp(-i theta X / 2).
  void apply_rx(std::size_t q, double theta);
  void apply_cx(std::size_t control, std::size_t target);
  void apply_ccx(std::size_t c0, std::size_t c1, std::size_t target);
  /// diag(1, e^{i phi}) on `target`, conditioned on every control being 1.
  /// Equivalent to a (multi-)controlled U3(0, phi, 0).
  void apply_controlled_phase(std::span<const std::size_t> controls, std::size_t target,
                              double phi);

 private:
  void check_qubit(std::size_t q) const;

  std::size_t data_qubits_;
  std::size_t ancilla_qubits_;
  std::vector<complex_t> amps_;
};

/// |<a|b>|. Both states must have the same dimension.
double fidelity(const Statevector& a, const Statevector& b);

enum class Backend { kDiagonal, kGateLevel };

const char* to_string(Backend b);
Backend backend_from_string(std::string_view s);

/// QAOA angles. gammas[k] and betas[k] parameterize layer k.
struct ParameterVector {
  std::vector<double> gammas;
  std::vector<double> betas;

  std::size_t depth() const noexcept { return gammas.size(); }

  /// Flat (gamma_1..gamma_p, beta_1..beta_p).
  std::vector<double> flatten() const;
  static ParameterVector unflatten(std::span<const double> flat);
};

/// |+>^{2n} on the color qubits; the gate-level backend appends two
/// ancillas in |0>.
Statevector prepare_initial(std::size_t n, Backend backend);

/// exp(-i beta X) on every data qubit.
void apply_mixer(Statevector& state, double beta);

/// Phase separator U_C(gamma) = exp(-i gamma H_C / 2):
/// amplitude[z] *= exp(-i gamma cd[z] / 2) over the data register.
///
/// With H_C = W_total - 2 C this is exp(i gamma C) up to a global phase, so
/// every cut edge contributes a relative phase w * gamma and the energy is
/// 2pi-periodic in gamma for integer weights.
void apply_phase_diagonal(Statevector& state, const CostDiagonal& cd, double gamma);

/// Gate-level phase separator: per edge a CX/X-conjugated controlled phase
/// for the same-field term and two ancilla-flagged multi-controlled phases
/// for the (10, 11) and (11, 10) aliasing terms, each with phi = -w gamma.
/// Equal to
/// apply_phase_diagonal up to a global phase. Ancillas must be |00> on entry
/// and are restored on exit.
void apply_phase_gate_level(Statevector& state, const Graph& g, double gamma);

class QaoaInstance {
 public:
  QaoaInstance(Graph graph, std::size_t depth, Backend backend = Backend::kDiagonal);

  const Graph& graph() const noexcept { return graph_; }
  const CostDiagonal& cost() const noexcept { return cost_; }
  std::size_t depth() const noexcept { return depth_; }
  Backend backend() const noexcept { return backend_; }

  /// prod_k U_M(beta_k) U_C(gamma_k) |psi_0>.
  Statevector run(const ParameterVector& theta) const;

  /// <psi(theta)| H_C |psi(theta)>.
  double energy(const ParameterVector& theta) const;

 private:
  Graph graph_;
  CostDiagonal cost_;
  std::size_t depth_;
  Backend backend_;
};

/// sum_z |amp_z|^2 cd[z]; ancilla bits are summed over.
double expectation(const Statevector& state, const CostDiagonal& cd);

inline constexpr std::size_t kDefaultShots = 4096;

/// Draws `shots` outcomes from |amp|^2, one inverse-CDF draw per shot.
/// Keys are data-register indices (ancilla bits stripped).
std::map<std::uint64_t, std::uint64_t> sample_counts(const Statevector& state,
                                                     std::size_t shots, Rng& rng);

}  // namespace tqaoa
