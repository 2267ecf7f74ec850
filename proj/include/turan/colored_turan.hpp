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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "turan/arith.hpp"
#include "turan/graph.hpp"

namespace turan {

// s simple graphs on a shared vertex set, read as one multigraph whose
// pair uv carries the set of layers containing it.
class ColoredMultigraph {
 public:
  ColoredMultigraph() = default;
  // Every layer must have \p n vertices; at most 32 layers.
  ColoredMultigraph(Vertex n, std::vector<Graph2> layers);

  Vertex vertex_count() const { return n_; }
  std::size_t layer_count() const { return layers_.size(); }
  std::span<const Graph2> layers() const { return layers_; }

  // Bit i set iff layer i contains uv.
  std::uint32_t colors(Vertex u, Vertex v) const;
  std::size_t multiplicity(Vertex u, Vertex v) const;
  std::size_t weighted_degree(Vertex v) const;
  // Sum of multiplicities over x in S, y in T, x != y (ordered), so
  // cut({v}, V) is the weighted degree of v.
  std::size_t cut(const VertexSet& left, const VertexSet& right) const;
  std::size_t min_degree() const;
  std::size_t total_edges() const;

 private:
  Vertex n_ = 0;
  std::vector<Graph2> layers_;
  std::vector<std::uint32_t> colors_;  // n*n, symmetric
};

enum class ClassShape { star, bipartite };

struct ColoredCliqueWitness {
  std::vector<Vertex> vertices;
  // Each pair of the clique with the 0-based layer it was assigned.
  std::vector<std::pair<Pair, std::size_t>> assignment;
};

// A t-clique whose pairs can each be given one of their layers so that at
// most (or, with exact_k, exactly) k layers appear and every layer class is
// a star (or bipartite). Searches vertex sets in lexicographic order.
std::optional<ColoredCliqueWitness> find_colored_clique(
    const ColoredMultigraph& m, std::size_t k, std::size_t t, bool exact_k,
    ClassShape shape);

std::optional<ColoredCliqueWitness> find_star_colored_clique(
    const ColoredMultigraph& m, std::size_t k, std::size_t t,
    bool exact_k = false);

// Re-checks a witness against the multigraph.
bool is_valid_colored_clique(const ColoredMultigraph& m, std::size_t k,
                             std::size_t t, bool exact_k, ClassShape shape,
                             const ColoredCliqueWitness& w);

// No (r-1)-star coloured K_r. Layers must share a vertex count.
bool is_star_colored_free(std::span<const Graph2> layers, std::size_t r,
                          bool exact_k = false);

struct ColoredMaxResult {
  Count value = 0;
  std::vector<Graph2> witness;
  std::uint64_t nodes = 0;
};

// Exact maximum of the total layer size over s-tuples of graphs on [0, n)
// with no (r-1)-star coloured K_r. Throws ResourceExhausted if more than
// \p budget search nodes are needed.
ColoredMaxResult max_colored_sum(Vertex n, std::size_t s, std::size_t r,
                                 bool exact_k, std::uint64_t budget);

// A closed-form bound plus whether its stated hypothesis on n holds.
struct EvaluatedBound {
  Count value = 0;
  bool in_range = true;
};

// s*C(n,2) for s <= r-2, otherwise s*t(n, r-1) + s*n; in range iff n > r^3.
EvaluatedBound star_colored_upper_bound(Count n, Count s, Count r);
// s*floor(n^2/4); in range iff s >= 2.
EvaluatedBound two_star_triangle_bound(Count n, Count s);
// s*t(n, r-1); in range iff s >= r-1.
EvaluatedBound star_colored_conjectured_bound(Count n, Count s, Count r);

// First u outside \p grown with weighted cut e(u, grown) >= |grown|(r-2)+1,
// the extension step of greedy star-coloured clique growth.
std::optional<Vertex> find_cut_extension(const ColoredMultigraph& m,
                                         const VertexSet& grown, std::size_t r);

}  // namespace turan
