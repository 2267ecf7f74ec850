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
#include <optional>
#include <string>
#include <vector>

#include "turan/graph.hpp"
#include "turan/hypergraph.hpp"

namespace turan {

// A nonnegative count or +infinity; infinity compares above every finite
// value.
class ExtendedCount {
 public:
  ExtendedCount() = default;
  explicit ExtendedCount(std::size_t value) : value_(value) {}
  static ExtendedCount infinity() { return ExtendedCount(); }

  bool is_infinite() const { return !value_.has_value(); }
  std::size_t value() const { return value_.value(); }
  std::string to_string() const;

  friend bool operator==(const ExtendedCount&, const ExtendedCount&) = default;
  friend std::strong_ordering operator<=>(const ExtendedCount& a,
                                          const ExtendedCount& b);

 private:
  std::optional<std::size_t> value_;
};

struct RedBlueColoring {
  VertexSet red;
  VertexSet blue;
};

struct RedBlueResult {
  ExtendedCount red_count;
  std::optional<RedBlueColoring> witness;  // set iff red_count is finite
};

// The colouring routines below are exponential and accept at most 64
// vertices.
inline constexpr Vertex kMaxColoringVertices = 64;

// Exact chromatic number: 0 for the empty graph, 1 if edgeless.
std::size_t graph_chromatic_number(const Graph2& g);

// Weak chromatic number: fewest colours with no monochromatic triple.
std::size_t hypergraph_chromatic_number(const Hypergraph3& h);

// Fewest red vertices in a red-blue colouring with no monochromatic edge.
RedBlueResult p_value(const Hypergraph3& h);

// Fewest red vertices in a colouring where every edge has exactly one red
// vertex; infinite when no such colouring exists.
RedBlueResult q_value(const Hypergraph3& h);

struct LinkChromaticProfile {
  std::vector<Vertex> ordering;     // by descending link chromatic number
  std::vector<std::size_t> values;  // values[i] = chi(L(ordering[i]))
};

// Ties are broken by ascending vertex label.
LinkChromaticProfile link_chromatic_profile(const Hypergraph3& h);

}  // namespace turan
