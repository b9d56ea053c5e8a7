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
#include <string>
#include <vector>

#include "tqaoa/graph.hpp"
#include "tqaoa/rng.hpp"

namespace tqaoa::testing {

inline std::string data_path(const std::string& name) {
  return std::string(TQAOA_DATA_DIR) + "/" + name;
}

inline Graph g4() {
  return Graph(4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}, {1, 2, 1.0}, {1, 3, 1.0}});
}

// Each pair is an edge with probability 1/2; weights integer in [1, 3] or
// unit when `unit` is set.
inline Graph random_graph(std::size_t n, Rng& rng, bool unit = false) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.below(2) == 1)
        edges.push_back({u, v, unit ? 1.0 : static_cast<double>(1 + rng.below(3))});
  return Graph(n, std::move(edges));
}

}  // namespace tqaoa::testing
