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
#include "turan/colorings.hpp"
#include "turan/constructions.hpp"
#include "turan_reference.hpp"

using namespace turan;
using turan::testing::complete3;
using turan::testing::random_graph;
using turan::testing::random_hypergraph;

namespace {

Graph2 complete_graph(Vertex n) { return turan_graph(n, n); }

Graph2 cycle(Vertex n) {
  std::vector<Pair> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(make_pair(v, (v + 1) % n));
  return Graph2(n, edges);
}

// Smallest k admitting a proper colouring, by trying all k^n maps.
std::size_t brute_chromatic(const Graph2& g) {
  const Vertex n = g.vertex_count();
  if (n == 0) return 0;
  for (std::size_t k = 1;; ++k) {
    std::vector<std::size_t> colour(n, 0);
    while (true) {
      bool ok = true;
      for (const Pair& p : g.edges()) ok = ok && colour[p.u] != colour[p.v];
      if (ok) return k;
      std::size_t i = 0;
      while (i < n && ++colour[i] == k) colour[i++] = 0;
      if (i == n) break;
    }
  }
}

ExtendedCount from_optional(std::optional<std::size_t> v) {
  return v ? ExtendedCount(*v) : ExtendedCount::infinity();
}

}  // namespace

TEST_SUITE("colorings") {

TEST_CASE("graph chromatic number") {
  CHECK(graph_chromatic_number(complete_graph(4)) == 4);
  CHECK(graph_chromatic_number(turan_graph(7, 3)) == 3);
  CHECK(graph_chromatic_number(cycle(5)) == 3);
  CHECK(graph_chromatic_number(cycle(6)) == 2);
  CHECK(graph_chromatic_number(Graph2(0)) == 0);
  CHECK(graph_chromatic_number(Graph2(3)) == 1);
}

TEST_CASE("graph chromatic number agrees with brute force") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 150; ++i) {
    const Vertex n = static_cast<Vertex>(rng() % 8);
    const auto g = random_graph(rng, n, 0.2 + 0.1 * static_cast<double>(rng() % 7));
    CHECK(graph_chromatic_number(g) == brute_chromatic(g));
  }
}

TEST_CASE("weak chromatic number") {
  CHECK(hypergraph_chromatic_number(f32()) == 2);
  CHECK(hypergraph_chromatic_number(complete3(4)) == 2);
  CHECK(hypergraph_chromatic_number(Hypergraph3(3)) == 1);
  CHECK(hypergraph_chromatic_number(complete3(5)) == 3);
  CHECK(hypergraph_chromatic_number(Hypergraph3(0)) == 0);
}

TEST_CASE("p values") {
  CHECK(p_value(f32()).red_count == ExtendedCount(2));
  CHECK(p_value(matching(2)).red_count == ExtendedCount(2));
  CHECK(p_value(Hypergraph3(4)).red_count == ExtendedCount(0));
  CHECK(p_value(complete3(5)).red_count.is_infinite());
}

TEST_CASE("q values") {
  for (Vertex t : {3u, 4u, 5u, 6u}) {
    CHECK(q_value(f_star_partition(t)).red_count == ExtendedCount(t - 1));
  }
  CHECK(q_value(f32()).red_count.is_infinite());
  for (Vertex t : {3u, 4u, 5u}) CHECK(q_value(full_star(t)).red_count == ExtendedCount(1));
  CHECK(q_value(f_matching_partition(2)).red_count == ExtendedCount(3));
  CHECK(q_value(Hypergraph3(3)).red_count == ExtendedCount(0));
  CHECK(ExtendedCount::infinity().to_string() == "inf");
  CHECK(ExtendedCount(3) < ExtendedCount::infinity());
}

TEST_CASE("colouring values agree with brute force") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const Vertex n = 1 + static_cast<Vertex>(rng() % 7);
    const auto h = random_hypergraph(rng, n, 0.1 + 0.1 * static_cast<double>(rng() % 5));
    const auto q = q_value(h);
    const auto p = p_value(h);
    CHECK(q.red_count == from_optional(reference::q_value(h)));
    CHECK(p.red_count == from_optional(reference::p_value(h)));
    CHECK(hypergraph_chromatic_number(h) == reference::weak_chromatic_number(h));
    CHECK(p.red_count <= q.red_count);
    if (h.edge_count() > 0) {
      CHECK(!p.red_count.is_infinite() == (hypergraph_chromatic_number(h) <= 2));
    }
    if (q.witness) {
      for (const Triple& e : h.edges()) {
        int red = 0;
        for (Vertex v : e) red += std::binary_search(q.witness->red.begin(), q.witness->red.end(), v);
        CHECK(red == 1);
      }
    }
  }
}

TEST_CASE("link chromatic profile") {
  const auto fp = link_chromatic_profile(f_star_partition(4));
  for (std::size_t v : fp.values) CHECK(v <= 2);
  const auto j = link_chromatic_profile(full_star(4));
  CHECK(j.ordering.front() == 0);
  CHECK(j.values.front() == 4);
  CHECK(j.values[1] == 2);
  CHECK(j.ordering[1] == 1);
  const auto e = link_chromatic_profile(Hypergraph3(3));
  CHECK(e.values == std::vector<std::size_t>{1, 1, 1});
  CHECK(std::is_sorted(j.values.rbegin(), j.values.rend()));
}

}  // TEST_SUITE
