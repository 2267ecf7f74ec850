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

#include <optional>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

// Injective map pattern vertex -> host vertex carrying every pattern edge
// onto a host edge.
using Embedding = std::vector<Vertex>;

// Hosts above this size are rejected by the backtracking engine, which
// keeps one co-neighbourhood bitset per host pair.
inline constexpr Vertex kMaxHostVertices = 512;

// The 4-subset scan is used for 4-vertex patterns while C(n, 4) stays
// below this.
inline constexpr Count kSubsetScanLimit = 100'000'000;

// Returns an embedding of \p pattern into \p host if one exists. Dispatches
// to the matching solver for matching patterns, the 4-subset scan for
// 4-vertex patterns and the backtracking engine otherwise.
std::optional<Embedding> find_embedding(const Hypergraph3& pattern,
                                        const Hypergraph3& host);

bool contains(const Hypergraph3& pattern, const Hypergraph3& host);

// Backtracking over pattern vertices in connected order; candidates come
// from co-neighbourhood bitsets and are filtered by degree and co-degree.
std::optional<Embedding> find_embedding_backtracking(const Hypergraph3& pattern,
                                                     const Hypergraph3& host);

// Exhaustive scan of all 4-subsets of the host. Pattern must have exactly
// four vertices.
std::optional<Embedding> find_embedding_subset_scan(const Hypergraph3& pattern,
                                                    const Hypergraph3& host);

bool is_valid_embedding(const Hypergraph3& pattern, const Hypergraph3& host,
                        const Embedding& map);

struct FamilyVerdicts {
  std::vector<bool> contained;  // one per family member

  bool free() const;
};

FamilyVerdicts family_free(const std::vector<Hypergraph3>& family,
                           const Hypergraph3& host);

}  // namespace turan
