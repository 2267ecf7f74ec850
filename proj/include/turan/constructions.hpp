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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "turan/arith.hpp"
#include "turan/graph.hpp"
#include "turan/hypergraph.hpp"

namespace turan {

// Complete t-partite graph on [0, n); vertex v sits in part v mod t.
// t = 0 is only legal for n = 0.
Graph2 turan_graph(Vertex n, Vertex t);
Count turan_count(Count n, Count t);

// Named hypergraph families used as forbidden patterns.
Hypergraph3 matching(std::size_t size);          // size disjoint triples
Hypergraph3 f_star_partition(Vertex t);          // t >= 3
Hypergraph3 f_matching_partition(Vertex t);      // t >= 2, on K_{2t}
Hypergraph3 full_star(Vertex t);                 // center 0, leaves 1..t
Hypergraph3 j_plus(Vertex t);                    // full_star + {1,2,3}
Hypergraph3 k4_minus();                          // {012, 013, 023}
Hypergraph3 f32();                               // {012, 034, 134, 234}

// Integer parameters of a construction, keyed by name ("n", "s", "t", "i").
using Params = std::map<std::string, Count>;

// A built hypergraph with its part layout and closed-form edge count.
struct BuiltConstruction {
  std::string name;
  Params params;
  Hypergraph3 hypergraph;
  std::vector<std::string> part_labels;  // indexed by vertex
  Count claimed_edges = 0;

  // Vertices carrying \p label, ascending.
  VertexSet part(std::string_view label) const;
};

// Extremal candidate for a 2-colourable pattern: parts A1 (i-1 vertices),
// A2 (s-i+1) then B (n-s) holding T(n-s, l_i - 1), where l_i is the i-th
// value of the link chromatic profile. Requires chi = 2 and i <= q <= s.
BuiltConstruction h_conjecture(const Hypergraph3& pattern, Count i, Count n,
                               Count s);

// Closed-form edge count of h_conjecture without building it.
Count h_conjecture_edges(const Hypergraph3& pattern, Count i, Count n, Count s);

// s apex vertices, each joined to every pair of the other n-s. n > s >= 0.
BuiltConstruction h_ns(Count n, Count s);

// s apex vertices, each joined to every edge of T(n-s, t-1).
// n > s >= t-1 >= 2.
BuiltConstruction h_b(Count n, Count s, Count t);

// Extremal K4- constructions for s in {1, 2}, n >= 5.
BuiltConstruction k4minus_extremal(Count n, Count s);

// T(n-s, t-1) under every apex plus T(s, t-2) on the apex side joined to B
// minus a smallest part. n > s >= 1, t >= 3.
BuiltConstruction concluding_construction(Count n, Count s, Count t);

// Pattern families as BuiltConstruction records with their edge counts.
BuiltConstruction build_pattern(std::string_view name, const Params& params);

struct ConstructionSpec {
  std::string name;
  Params params;
};

// Builds any catalog entry by name. \p pattern is required by
// "h-conjecture" and ignored otherwise.
BuiltConstruction build(const ConstructionSpec& spec,
                        const Hypergraph3* pattern = nullptr);

std::vector<std::string> catalog_names();

}  // namespace turan
