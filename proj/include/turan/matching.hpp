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
#include <optional>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

// Returns \p k pairwise disjoint edges of \p h, or nothing if none exist.
// Exact: branches on the lowest-indexed remaining edge, with a greedy
// matching as lower bound and a greedy vertex cover as upper bound.
std::optional<std::vector<Triple>> find_matching_of_size(const Hypergraph3& h,
                                                         std::size_t k);

bool has_matching_of_size(const Hypergraph3& h, std::size_t k);

// Exact matching number by iterative deepening from a greedy matching.
std::size_t matching_number(const Hypergraph3& h);

}  // namespace turan
