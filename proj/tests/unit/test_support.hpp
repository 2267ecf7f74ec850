// Copyright 2026 The turanbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <random>
#include <vector>

#include "turan/colored_turan.hpp"
#include "turan/hypergraph.hpp"

namespace turan::testing {

// Each triple of [0, n) kept independently with probability \p density.
inline Hypergraph3 random_hypergraph(std::mt19937_64& rng, Vertex n, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<Triple> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        if (keep(rng)) edges.push_back({a, b, c});
      }
    }
  }
  return Hypergraph3(n, std::move(edges));
}

inline Graph2 random_graph(std::mt19937_64& rng, Vertex n, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<Pair> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (keep(rng)) edges.push_back({a, b});
    }
  }
  return Graph2(n, std::move(edges));
}

inline ColoredMultigraph random_multigraph(std::mt19937_64& rng, Vertex n,
                                           std::size_t s, double density) {
  std::vector<Graph2> layers;
  for (std::size_t i = 0; i < s; ++i) layers.push_back(random_graph(rng, n, density));
  return ColoredMultigraph(n, std::move(layers));
}

inline Hypergraph3 complete3(Vertex n) {
  std::mt19937_64 rng(0);
  return random_hypergraph(rng, n, 1.0);
}

}  // namespace turan::testing
