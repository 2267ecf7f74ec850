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

#include "turan/graph.hpp"

#include <algorithm>
#include <string>

#include "turan/errors.hpp"

namespace turan {

VertexSet make_vertex_set(VertexSet set, Vertex n) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (!set.empty() && set.back() >= n) {
    throw InputError("vertex " + std::to_string(set.back()) +
                     " out of range for n=" + std::to_string(n));
  }
  return set;
}

VertexSet all_vertices(Vertex n) {
  VertexSet out(n);
  for (Vertex v = 0; v < n; ++v) out[v] = v;
  return out;
}

Pair make_pair(Vertex a, Vertex b) {
  if (a == b) throw InputError("loop at vertex " + std::to_string(a));
  return a < b ? Pair{a, b} : Pair{b, a};
}

Graph2::Graph2(Vertex n, std::vector<Pair> edges) : n_(n) {
  for (Pair& p : edges) {
    p = make_pair(p.u, p.v);
    if (p.v >= n) {
      throw InputError("edge {" + std::to_string(p.u) + "," +
                       std::to_string(p.v) + "} out of range for n=" +
                       std::to_string(n));
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InputError("duplicate edge in graph");
  }
  edges_ = std::move(edges);
}

bool Graph2::has_edge(Vertex a, Vertex b) const {
  if (a == b) return false;
  return std::binary_search(edges_.begin(), edges_.end(), make_pair(a, b));
}

std::size_t Graph2::degree(Vertex v) const {
  if (v >= n_) throw InputError("vertex out of range");
  return static_cast<std::size_t>(std::count_if(
      edges_.begin(), edges_.end(),
      [v](const Pair& p) { return p.u == v || p.v == v; }));
}

std::vector<std::vector<Vertex>> Graph2::adjacency_lists() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (const Pair& p : edges_) {
    adj[p.u].push_back(p.v);
    adj[p.v].push_back(p.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

}  // namespace turan
