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

#include <numeric>
#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "turan/arith.hpp"
#include "turan/constructions.hpp"
#include "turan/errors.hpp"
#include "turan/hypergraph.hpp"
#include "turan/matching.hpp"
#include "turan_reference.hpp"

using namespace turan;
using turan::testing::complete3;
using turan::testing::random_hypergraph;

TEST_SUITE("hypergraph_core") {

TEST_CASE("binomial and checked arithmetic") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(95, 2) == 4465);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 2) == 0);
  CHECK(binomial(62, 31) == 465428353255261088LL);
  CHECK_THROWS_AS(binomial(70, 35), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(Count{1} << 40, Count{1} << 40), std::overflow_error);
  CHECK(floor_div(-7, 2) == -4);
}

TEST_CASE("canonical storage rejects malformed edges") {
  const Hypergraph3 h(4, {{2, 1, 0}, {3, 0, 1}});
  CHECK(h.edges()[0] == Triple{0, 1, 2});
  CHECK(h.edges()[1] == Triple{0, 1, 3});
  CHECK_THROWS_AS(Hypergraph3(4, {{0, 1, 1}}), InputError);
  CHECK_THROWS_AS(Hypergraph3(4, {{0, 1, 4}}), InputError);
  CHECK_THROWS_AS(Hypergraph3(4, {{0, 1, 2}, {2, 1, 0}}), InputError);
  CHECK_THROWS_AS(Graph2(3, {{1, 1}}), InputError);
  CHECK(Hypergraph3(0).edge_count() == 0);
}

TEST_CASE("link graphs") {
  const Graph2 l = link_graph(k4_minus(), 0);
  CHECK(l == Graph2(4, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(link_graph(matching(2), 0) == Graph2(6, {{1, 2}}));
  CHECK(link_graph(f32(), 4) == Graph2(5, {{0, 3}, {1, 3}, {2, 3}}));
  CHECK(link_graph(k4_minus(), 0, {0, 1, 2}).edge_count() == 1);
  CHECK_THROWS_AS(link_graph(k4_minus(), 4), InputError);
}

TEST_CASE("pair neighbourhoods and co-degree") {
  const auto h = h_ns(10, 2).hypergraph;
  CHECK(pair_neighborhood(h, 0, 1).empty());
  const VertexSet expected{2, 3, 4, 6, 7, 8, 9};
  CHECK(pair_neighborhood(h, 0, 5) == expected);
  CHECK(pair_neighborhood(matching(2), 0, 1) == VertexSet{2});
  CHECK_THROWS_AS(pair_neighborhood(h, 3, 3), InputError);
  CHECK(max_codegree(h) == 7);
  CHECK(max_codegree(Hypergraph3(5)) == 0);
  CHECK(max_codegree(complete3(5)) == 3);
  CHECK_THROWS_AS(max_codegree(Hypergraph3(1)), InputError);
}

TEST_CASE("matching decisions") {
  CHECK(has_matching_of_size(matching(3), 3));
  CHECK_FALSE(has_matching_of_size(complete3(5), 2));
  CHECK(has_matching_of_size(Hypergraph3(0), 0));
  for (Count n : {5, 8, 12}) {
    for (Count s : {1, 2, 3}) {
      if (n <= s) continue;
      CHECK_FALSE(has_matching_of_size(h_ns(n, s).hypergraph, static_cast<std::size_t>(s + 1)));
    }
  }
  const auto w = find_matching_of_size(matching(3), 3);
  REQUIRE(w.has_value());
  CHECK(w->size() == 3);
  CHECK(matching_number(matching(4)) == 4);
  CHECK(matching_number(h_b(20, 3, 4).hypergraph) == 3);
  CHECK(matching_number(Hypergraph3(9)) == 0);
}

TEST_CASE("matching number agrees with the subset oracle") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Vertex n = 3 + static_cast<Vertex>(rng() % 6);
    const double density = 0.05 + 0.1 * static_cast<double>(rng() % 6);
    const auto h = random_hypergraph(rng, n, density);
    CHECK(matching_number(h) == reference::matching_number(h));
  }
}

TEST_CASE("weak independence") {
  const auto c = h_ns(12, 3);
  CHECK(is_weakly_independent(c.hypergraph, c.part("B")));
  CHECK(is_weakly_independent(c.hypergraph, c.part("A")));
  CHECK_FALSE(is_weakly_independent(c.hypergraph, {0, 3, 4, 5}));
  CHECK(is_weakly_independent(complete3(6), {1, 4}));
}

TEST_CASE("degree partition") {
  const auto c = h_ns(20, 2);
  const auto part = degree_partition(c.hypergraph, 2);
  CHECK(part.threshold == 121);
  CHECK(part.high == VertexSet{0, 1});
  CHECK(part.low.size() == 18);
  CHECK(degree_partition(Hypergraph3(6), 1).high.empty());
  CHECK(degree_partition(complete3(7), 0).high.size() == 7);
}

TEST_CASE("induced, cross and shadow") {
  CHECK(shadow(matching(2)) ==
        Graph2(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}));
  const auto c = h_ns(6, 1);
  CHECK(cross_subgraph(c.hypergraph, c.part("A"), c.part("B")) == c.hypergraph);
  CHECK_THROWS_AS(cross_subgraph(c.hypergraph, {0, 1}, {1, 2}), InputError);
  const auto k = complete3(6);
  CHECK(induced(k, {1, 3, 5}).edge_count() == 1);
  CHECK(induced(k, {1, 3, 5}).vertex_count() == 6);
  const auto small = compact(k, {1, 3, 5});
  CHECK(small.graph == Hypergraph3(3, {{0, 1, 2}}));
  CHECK(small.original == std::vector<Vertex>{1, 3, 5});
}

TEST_CASE("structural identities on random hypergraphs") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Vertex n = 2 + static_cast<Vertex>(rng() % 9);
    const auto h = random_hypergraph(rng, n, 0.4);
    const auto degs = h.degrees();
    CHECK(std::accumulate(degs.begin(), degs.end(), std::size_t{0}) == 3 * h.edge_count());
    std::size_t codeg = 0;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) codeg += pair_neighborhood(h, u, v).size();
    }
    CHECK(codeg == 3 * h.edge_count());
    VertexSet a, b;
    for (Vertex v = 0; v < n; ++v) (rng() % 2 ? a : b).push_back(v);
    CHECK(induced(h, a).edge_count() + cross_subgraph(h, a, b).edge_count() +
              induced(h, b).edge_count() ==
          h.edge_count());
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(matching_number(relabel(h, perm)) == matching_number(h));
  }
}

}  // TEST_SUITE
