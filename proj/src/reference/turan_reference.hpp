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

// Brute-force oracles. Each routine enumerates its search space directly,
// sharing no search code with the core library, and is meant for inputs
// of a few vertices only.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "turan/colored_turan.hpp"
#include "turan/hypergraph.hpp"

namespace turan::reference {

// Tries every injection V(F) -> V(H).
bool contains(const Hypergraph3& pattern, const Hypergraph3& host);

// Largest pairwise disjoint edge subset, by enumerating all matchings.
std::size_t matching_number(const Hypergraph3& h);

// Tries every t-subset and every choice of one available layer per pair.
bool has_star_colored_clique(const ColoredMultigraph& m, std::size_t k,
                             std::size_t t, bool exact_k);

// Maximum edge count over all 2^C(n,3) edge sets avoiding the family and,
// if given, a matching of size bound + 1. n <= 6.
std::size_t extremal_number(std::uint32_t n, const std::vector<Hypergraph3>& family,
                            std::optional<std::size_t> matching_bound);

// Maximum total layer size over all s-tuples of graphs on [0, n) with no
// (r-1)-star coloured K_r. s*C(n,2) <= 20.
std::size_t colored_max(std::uint32_t n, std::size_t s, std::size_t r, bool exact_k);

// Fewest colours with no monochromatic triple, by trying all colourings.
std::size_t weak_chromatic_number(const Hypergraph3& h);

// Minimum red count over all 2^n red sets; nullopt when none qualifies.
std::optional<std::size_t> p_value(const Hypergraph3& h);
std::optional<std::size_t> q_value(const Hypergraph3& h);

}  // namespace turan::reference
