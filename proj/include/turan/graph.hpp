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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace turan {

using Vertex = std::uint32_t;

// Sorted, duplicate-free list of vertex labels.
using VertexSet = std::vector<Vertex>;

// Sorts and deduplicates \p set; throws InputError if a label is >= n.
VertexSet make_vertex_set(VertexSet set, Vertex n);

// [0, n)
VertexSet all_vertices(Vertex n);

// Unordered pair stored with u < v.
struct Pair {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Pair&, const Pair&) = default;
};

// Throws InputError when u == v.
Pair make_pair(Vertex a, Vertex b);

// A simple graph on [0, n). Edges are canonical pairs kept in ascending
// order; the value is immutable after construction.
class Graph2 {
 public:
  Graph2() = default;
  explicit Graph2(Vertex n) : n_(n) {}
  // Rejects loops, duplicate pairs and labels >= n.
  Graph2(Vertex n, std::vector<Pair> edges);

  Vertex vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Pair> edges() const { return edges_; }

  bool has_edge(Vertex a, Vertex b) const;
  std::size_t degree(Vertex v) const;
  std::vector<std::vector<Vertex>> adjacency_lists() const;

  friend bool operator==(const Graph2&, const Graph2&) = default;

 private:
  Vertex n_ = 0;
  std::vector<Pair> edges_;
};

}  // namespace turan
