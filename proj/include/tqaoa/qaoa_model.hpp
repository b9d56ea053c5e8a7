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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tqaoa/graph.hpp"

namespace tqaoa {

// Binary color encoding for max-3-cut.
//
// Vertex i owns bits (2i, 2i+1) of a basis index. The more significant bit
// of the pair is q_i^0 and the less significant one is q_i^1, so the pair
// reads as the two-bit value q_i^0 q_i^1. Vertex 0 owns the lowest pair.
// Qubit number equals bit position throughout the simulator.

inline constexpr int kColors = 3;

/// Largest vertex count for which the dense 4^n cost diagonal is built.
inline constexpr std::size_t kMaxDenseVertices = 13;

/// 4x4 interaction matrix D: +1 where two vertex fields encode the same
/// color, -1 otherwise. Fields 10 and 11 both encode color 2.
using InteractionTable = std::array<std::array<int, 4>, 4>;

InteractionTable interaction_table();

/// Bit position of q_i^0 (high bit of the vertex pair).
constexpr std::size_t high_qubit(std::size_t vertex) { return 2 * vertex + 1; }
/// Bit position of q_i^1 (low bit of the vertex pair).
constexpr std::size_t low_qubit(std::size_t vertex) { return 2 * vertex; }

/// Two-bit field of `vertex` inside basis index z.
constexpr unsigned vertex_field(std::uint64_t z, std::size_t vertex) {
  return static_cast<unsigned>((z >> (2 * vertex)) & 3u);
}

/// 00 -> 0, 01 -> 1, 10 -> 2, 11 -> 2.
int decode_vertex(unsigned bits);

Coloring decode_bitstring(std::uint64_t z, std::size_t n);

/// Renders z as 2n characters, vertex 0's pair leftmost, q^0 before q^1.
std::string render_bitstring(std::uint64_t z, std::size_t n);

/// Diagonal of the cost Hamiltonian over the 4^n color basis states.
struct CostDiagonal {
  std::size_t num_vertices = 0;
  std::vector<double> values;

  std::size_t dimension() const noexcept { return values.size(); }
};

/// values[z] = sum over edges of w_ij * D[field_i(z), field_j(z)].
CostDiagonal build_cost_diagonal(const Graph& g);

/// Inverts the encoding: cut = (W_total - energy) / 2.
double cut_from_energy(double energy, const Graph& g);

}  // namespace tqaoa
