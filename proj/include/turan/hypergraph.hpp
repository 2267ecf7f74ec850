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

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "turan/arith.hpp"
#include "turan/graph.hpp"

namespace turan {

// Three distinct vertices, ascending.
using Triple = std::array<Vertex, 3>;

// Sorts the labels; throws InputError unless they are pairwise distinct.
Triple make_triple(Vertex a, Vertex b, Vertex c);

// A 3-uniform hypergraph on [0, n). Edges are canonical triples kept in
// ascending lexicographic order. Degrees are cached at construction.
class Hypergraph3 {
 public:
  Hypergraph3() = default;
  explicit Hypergraph3(Vertex n);
  // Canonicalizes every triple; rejects repeated vertices, duplicate
  // triples and labels >= n.
  Hypergraph3(Vertex n, std::vector<Triple> edges);

  Vertex vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Triple> edges() const { return edges_; }

  bool has_edge(const Triple& t) const;
  std::size_t degree(Vertex v) const { return degrees_.at(v); }
  std::span<const std::size_t> degrees() const { return degrees_; }

  friend bool operator==(const Hypergraph3& a, const Hypergraph3& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Vertex n_ = 0;
  std::vector<Triple> edges_;
  std::vector<std::size_t> degrees_;
};

// Pairs xy inside S with vxy an edge. The result lives on all H vertices.
Graph2 link_graph(const Hypergraph3& h, Vertex v, const VertexSet& within);
Graph2 link_graph(const Hypergraph3& h, Vertex v);

// {w : uvw in E(H)}. Throws InputError when u == v.
VertexSet pair_neighborhood(const Hypergraph3& h, Vertex u, Vertex v);

// Maximum pair co-degree; 0 for edgeless H. Requires n >= 2.
std::size_t max_codegree(const Hypergraph3& h);

// True iff no edge lies inside \p set.
bool is_weakly_independent(const Hypergraph3& h, const VertexSet& set);

// Split of the vertex set at degree threshold 3*s*n + 1.
struct DegreePartition {
  VertexSet high;  // degree >= threshold
  VertexSet low;   // degree < threshold
  Count threshold = 0;
};

DegreePartition degree_partition(const Hypergraph3& h, Count s);

// Edges inside \p set, same label space.
Hypergraph3 induced(const Hypergraph3& h, const VertexSet& set);

// Edges meeting both \p left and \p right; throws InputError if they
// overlap.
Hypergraph3 cross_subgraph(const Hypergraph3& h, const VertexSet& left,
                           const VertexSet& right);

// All pairs covered by some triple.
Graph2 shadow(const Hypergraph3& h);

// Result of relabeling a vertex subset onto [0, |set|).
struct Compacted {
  Hypergraph3 graph;
  std::vector<Vertex> original;  // new label -> old label
};

// Induced subhypergraph on \p set, relabeled in ascending order.
Compacted compact(const Hypergraph3& h, const VertexSet& set);

// Applies \p perm (old label -> new label, a permutation of [0, n)).
Hypergraph3 relabel(const Hypergraph3& h, std::span<const Vertex> perm);

}  // namespace turan
