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
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

// Largest n accepted by the search at all; triples must fit a 64-bit mask.
inline constexpr Vertex kSearchHardLimit = 8;

struct SearchInstance {
  Vertex n = 0;
  // Forbid a matching of matching_bound + 1 triples; none means no bound.
  std::optional<std::size_t> matching_bound;
  std::vector<Hypergraph3> family;  // each with at most 6 vertices
  std::uint64_t budget = 200'000'000;
  Vertex max_vertices = 7;
};

struct SearchResult {
  Count value = 0;
  Hypergraph3 witness;
  std::uint64_t nodes = 0;
  // False when the budget ran out; value is then only a lower bound.
  bool exact = true;
};

// Maximum number of triples on [0, n) avoiding the family and, if given, a
// matching of size matching_bound + 1. Include/exclude DFS over triples in
// colex order with the first triple forced to {0,1,2}.
SearchResult solve(const SearchInstance& inst);

struct EnumerationResult {
  Count value = 0;
  // One canonical representative per isomorphism class, in increasing
  // order of their colex edge masks.
  std::vector<Hypergraph3> classes;
  std::uint64_t nodes = 0;
  bool exact = true;
};

// All maximum avoiders up to isomorphism. Requires n <= 6.
EnumerationResult enumerate_extremal(const SearchInstance& inst);

// Canonical form: the relabelling with the smallest colex edge mask. n <= 8.
Hypergraph3 canonical_form(const Hypergraph3& h);

}  // namespace turan
