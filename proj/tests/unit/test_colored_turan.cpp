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

#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "turan/colored_turan.hpp"
#include "turan/constructions.hpp"
#include "turan/errors.hpp"
#include "turan_reference.hpp"

using namespace turan;
using turan::testing::random_multigraph;

namespace {

std::vector<Graph2> copies(const Graph2& g, std::size_t s) {
  return std::vector<Graph2>(s, g);
}

}  // namespace

TEST_SUITE("colored_turan") {

TEST_CASE("multiplicities, degrees and cuts") {
  const ColoredMultigraph m(4, copies(turan_graph(4, 2), 2));
  CHECK(m.multiplicity(0, 1) == 2);
  CHECK(m.multiplicity(0, 2) == 0);
  CHECK(m.min_degree() == 4);
  CHECK(m.total_edges() == 8);
  for (Vertex v = 0; v < 4; ++v) {
    VertexSet rest;
    for (Vertex x = 0; x < 4; ++x) {
      if (x != v) rest.push_back(x);
    }
    CHECK(m.cut({v}, rest) == m.weighted_degree(v));
    CHECK(m.cut({v}, all_vertices(4)) == m.weighted_degree(v));
  }
  const ColoredMultigraph empty(5, copies(Graph2(5), 3));
  CHECK(empty.min_degree() == 0);
  CHECK(empty.cut({0, 1}, {2, 3}) == 0);
  CHECK_THROWS_AS(ColoredMultigraph(4, {Graph2(4), Graph2(5)}), InputError);
}

TEST_CASE("star coloured cliques") {
  const ColoredMultigraph two(3, {Graph2(3, {{0, 1}, {0, 2}}), Graph2(3, {{1, 2}})});
  const auto w = find_star_colored_clique(two, 2, 3);
  REQUIRE(w.has_value());
  CHECK(is_valid_colored_clique(two, 2, 3, false, ClassShape::star, *w));
  CHECK(find_star_colored_clique(two, 2, 3, true).has_value());

  const ColoredMultigraph tri(3, {Graph2(3, {{0, 1}, {0, 2}, {1, 2}})});
  CHECK_FALSE(find_star_colored_clique(tri, 1, 3).has_value());
  CHECK(find_colored_clique(tri, 1, 3, false, ClassShape::bipartite) == std::nullopt);

  for (std::size_t r : {3u, 4u, 5u}) {
    const auto layers = copies(turan_graph(9, static_cast<Vertex>(r - 1)), 3);
    CHECK(is_star_colored_free(layers, r));
  }
  CHECK_FALSE(find_star_colored_clique(two, 2, 4).has_value());
  CHECK_THROWS_AS(find_star_colored_clique(two, 0, 3), InputError);
  CHECK_THROWS_AS(is_star_colored_free(two.layers(), 2), InputError);
}

TEST_CASE("bipartite classes") {
  // A 4-cycle in one layer plus the diagonals in another.
  const ColoredMultigraph m(4, {Graph2(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}),
                                Graph2(4, {{0, 2}, {1, 3}})});
  const auto w = find_colored_clique(m, 2, 4, true, ClassShape::bipartite);
  REQUIRE(w.has_value());
  CHECK(is_valid_colored_clique(m, 2, 4, true, ClassShape::bipartite, *w));
  CHECK_FALSE(find_colored_clique(m, 2, 4, true, ClassShape::star).has_value());
}

TEST_CASE("link family of H_B is star coloured clique free") {
  const auto c = h_b(20, 3, 4);
  std::vector<Graph2> links;
  for (Vertex u : c.part("U")) links.push_back(link_graph(c.hypergraph, u));
  CHECK(is_star_colored_free(links, 4));
}

TEST_CASE("clique search agrees with brute-force colour assignment") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 150; ++i) {
    const Vertex n = 3 + static_cast<Vertex>(rng() % 4);
    const std::size_t s = 1 + rng() % 3;
    const std::size_t t = 3 + rng() % 2;
    const std::size_t k = 1 + rng() % 3;
    const bool exact = rng() % 2 == 0;
    const auto m = random_multigraph(rng, n, s, 0.4 + 0.1 * static_cast<double>(rng() % 5));
    const auto w = find_star_colored_clique(m, k, t, exact);
    CHECK(w.has_value() == reference::has_star_colored_clique(m, k, t, exact));
    if (w) CHECK(is_valid_colored_clique(m, k, t, exact, ClassShape::star, *w));
  }
}

TEST_CASE("exact and at-most modes agree at k = t - 1") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    const Vertex n = 4 + static_cast<Vertex>(rng() % 3);
    const std::size_t t = 3 + rng() % 2;
    const auto m = random_multigraph(rng, n, 1 + rng() % 3, 0.6);
    CHECK(find_star_colored_clique(m, t - 1, t, true).has_value() ==
          find_star_colored_clique(m, t - 1, t, false).has_value());
  }
}

TEST_CASE("exhaustive coloured maximum") {
  CHECK(max_colored_sum(4, 2, 3, false, 1'000'000).value == 8);
  CHECK(max_colored_sum(5, 2, 3, false, 1'000'000).value == 12);
  CHECK(max_colored_sum(4, 3, 3, false, 1'000'000).value == 12);
  const auto probe = max_colored_sum(4, 3, 4, false, 1'000'000);
  CHECK(probe.value == 15);
  CHECK(is_star_colored_free(probe.witness, 4));
  Count total = 0;
  for (const Graph2& g : probe.witness) total += static_cast<Count>(g.edge_count());
  CHECK(total == probe.value);
  CHECK_THROWS_AS(max_colored_sum(6, 2, 3, false, 100), ResourceExhausted);
  CHECK_THROWS_AS(max_colored_sum(4, 2, 2, false, 100), InputError);
}

TEST_CASE("coloured maximum agrees with full enumeration") {
  for (auto [n, s, r] : {std::array<std::size_t, 3>{3, 2, 3}, {4, 1, 3}, {4, 2, 3},
                         {4, 3, 4}, {5, 2, 4}, {4, 2, 4}, {5, 1, 3}, {6, 1, 4}}) {
    const auto v = static_cast<Vertex>(n);
    for (bool exact : {false, true}) {
      const auto got = max_colored_sum(v, s, r, exact, 10'000'000);
      CHECK(got.value == static_cast<Count>(reference::colored_max(v, s, r, exact)));
      CHECK(is_star_colored_free(got.witness, r, exact));
      CHECK(got.value >= static_cast<Count>(s) * turan_count(static_cast<Count>(n), static_cast<Count>(r - 1)));
    }
  }
}

TEST_CASE("bound evaluators") {
  const auto b16 = star_colored_upper_bound(64, 3, 4);
  CHECK(b16.value == 3 * turan_count(64, 3) + 192);
  CHECK_FALSE(b16.in_range);
  CHECK(star_colored_upper_bound(65, 3, 4).in_range);
  CHECK(star_colored_upper_bound(4, 3, 4).value == 27);
  CHECK(star_colored_upper_bound(5, 1, 4).value == 10);
  CHECK(two_star_triangle_bound(4, 2).value == 8);
  CHECK_FALSE(two_star_triangle_bound(4, 1).in_range);
  CHECK(star_colored_conjectured_bound(4, 3, 4).value == 15);
  CHECK(star_colored_conjectured_bound(4, 3, 4).in_range);
}

TEST_CASE("cut extension step") {
  const std::size_t r = 4;
  const ColoredMultigraph full(6, copies(turan_graph(6, 6), r - 1));
  for (Vertex u = 0; u < 6; ++u) {
    if (u == 2) continue;
    VertexSet grown{2};
    CHECK(full.cut({u}, grown) == r - 1);
  }
  CHECK(find_cut_extension(full, {2, 4}, r) == Vertex{0});
  CHECK(find_cut_extension(full, {0, 1, 2}, r) == Vertex{3});
  const ColoredMultigraph empty(6, copies(Graph2(6), 3));
  CHECK_FALSE(find_cut_extension(empty, {}, r).has_value());
  CHECK_FALSE(find_cut_extension(empty, {1}, r).has_value());
  const ColoredMultigraph tur(12, copies(turan_graph(12, 3), 3));
  const auto u = find_cut_extension(tur, {0, 3}, r);
  REQUIRE(u.has_value());
  CHECK(*u % 3 != 0);
  CHECK_THROWS_AS(find_cut_extension(tur, {0, 1, 2, 4}, r), InputError);
}

}  // TEST_SUITE
