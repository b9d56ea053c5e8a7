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

#include "tqaoa/qaoa_model.hpp"

#include <stdexcept>

namespace tqaoa {

InteractionTable interaction_table() {
  return {{
      {1, -1, -1, -1},
      {-1, 1, -1, -1},
      {-1, -1, 1, 1},
      {-1, -1, 1, 1},
  }};
}

int decode_vertex(unsigned bits) {
  if (bits > 3) throw std::invalid_argument("vertex field must be two bits");
  return bits >= 2 ? 2 : static_cast<int>(bits);
}

Coloring decode_bitstring(std::uint64_t z, std::size_t n) {
  if (n >= 32 || z >> (2 * n) != 0) {
    throw std::out_of_range("basis index " + std::to_string(z) + " out of range for " +
                            std::to_string(n) + " vertices");
  }
  Coloring colors(n);
  for (std::size_t i = 0; i < n; ++i) colors[i] = decode_vertex(vertex_field(z, i));
  return colors;
}

std::string render_bitstring(std::uint64_t z, std::size_t n) {
  std::string s;
  s.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned f = vertex_field(z, i);
    s.push_back((f & 2u) ? '1' : '0');
    s.push_back((f & 1u) ? '1' : '0');
  }
  return s;
}

CostDiagonal build_cost_diagonal(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kMaxDenseVertices) {
    throw std::invalid_argument("dense cost diagonal limited to " +
                                std::to_string(kMaxDenseVertices) + " vertices");
  }
  const auto d = interaction_table();
  CostDiagonal cd{n, std::vector<double>(std::size_t{1} << (2 * n), 0.0)};
  for (std::uint64_t z = 0; z < cd.values.size(); ++z) {
    double acc = 0.0;
    for (const auto& e : g.edges()) acc += e.weight * d[vertex_field(z, e.u)][vertex_field(z, e.v)];
    cd.values[z] = acc;
  }
  return cd;
}

double cut_from_energy(double energy, const Graph& g) {
  return (g.total_weight() - energy) / 2.0;
}

}  // namespace tqaoa
