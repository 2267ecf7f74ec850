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

#include <set>

#include "doctest.h"
#include "turan/colorings.hpp"
#include "turan/constructions.hpp"
#include "turan/containment.hpp"
#include "turan/errors.hpp"
#include "turan/matching.hpp"

using namespace turan;

namespace {

void check_layout(const BuiltConstruction& c) {
  CHECK(static_cast<Count>(c.hypergraph.edge_count()) == c.claimed_edges);
  CHECK(c.part_labels.size() == c.hypergraph.vertex_count());
  for (const auto& label : c.part_labels) CHECK_FALSE(label.empty());
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("turan graphs") {
  CHECK(turan_count(4, 2) == 4);
  CHECK(turan_count(7, 3) == 16);
  CHECK(turan_count(9, 1) == 0);
  CHECK(turan_count(0, 0) == 0);
  CHECK_THROWS_AS(turan_count(3, 0), InputError);
  CHECK_THROWS_AS(turan_graph(3, 0), InputError);
  for (Vertex n = 0; n < 12; ++n) {
    for (Vertex t = 1; t < 6; ++t) {
      CHECK(static_cast<Count>(turan_graph(n, t).edge_count()) == turan_count(n, t));
    }
  }
  CHECK(turan_count(95, 3) == 3008);
}

TEST_CASE("pattern families") {
  CHECK(matching(1).edge_count() == 1);
  CHECK(matching(3).vertex_count() == 9);
  CHECK(shadow(matching(3)).edge_count() == 9);
  const auto f3 = f_star_partition(3);
  CHECK(f3.vertex_count() == 5);
  CHECK(f3.edge_count() == 3);
  CHECK(f_star_partition(4).vertex_count() == 7);
  CHECK(f_star_partition(4).edge_count() == 6);
  CHECK(f_star_partition(5).edge_count() == 10);
  const auto fm = f_matching_partition(2);
  CHECK(fm.vertex_count() == 7);
  CHECK(fm.edge_count() == 6);
  CHECK(f_matching_partition(3).edge_count() == 15);
  CHECK(full_star(4).edge_count() == 6);
  CHECK(j_plus(4).edge_count() == 7);
  CHECK(k4_minus() == full_star(3));
  CHECK(f32() == Hypergraph3(5, {{0, 1, 2}, {0, 3, 4}, {1, 3, 4}, {2, 3, 4}}));
  CHECK_THROWS_AS(f_star_partition(2), InputError);
}

TEST_CASE("partition patterns cover the clique side exactly once") {
  for (Vertex t : {3u, 4u, 5u, 6u}) {
    const auto f = f_star_partition(t);
    const Vertex base = t - 1;
    std::set<std::pair<Vertex, Vertex>> pairs;
    for (const Triple& e : f.edges()) {
      CHECK(e[0] < base);
      CHECK(e[1] >= base);
      pairs.insert({e[1], e[2]});
    }
    CHECK(pairs.size() == t * (t - 1) / 2);
  }
  for (Vertex t : {2u, 3u, 4u}) {
    const auto f = f_matching_partition(t);
    const Vertex base = 2 * t - 1;
    std::set<std::pair<Vertex, Vertex>> pairs;
    for (const Triple& e : f.edges()) pairs.insert({e[1] - base, e[2] - base});
    CHECK(pairs.size() == t * (2 * t - 1));
    for (Vertex a = 0; a < base; ++a) CHECK(f.degree(a) == t);
  }
}

TEST_CASE("h_ns") {
  const auto c = h_ns(10, 2);
  CHECK(c.claimed_edges == 56);
  check_layout(c);
  CHECK(c.part("A") == VertexSet{0, 1});
  CHECK_FALSE(has_matching_of_size(c.hypergraph, 3));
  CHECK_FALSE(contains(f32(), c.hypergraph));
  CHECK(max_codegree(c.hypergraph) == 7);
  CHECK_THROWS_AS(h_ns(3, 3), InputError);
  CHECK(h_ns(4, 0).hypergraph.edge_count() == 0);
}

TEST_CASE("h_b") {
  const auto c = h_b(100, 5, 4);
  CHECK(c.claimed_edges == 15040);
  check_layout(c);
  CHECK(c.part("U").size() == 5);
  const auto small = h_b(20, 3, 4);
  check_layout(small);
  CHECK_FALSE(contains(f_star_partition(4), small.hypergraph));
  CHECK_FALSE(has_matching_of_size(small.hypergraph, 4));
  CHECK_THROWS_AS(h_b(20, 1, 4), InputError);
}

TEST_CASE("k4minus_extremal") {
  const auto odd = k4minus_extremal(7, 2);
  CHECK(odd.claimed_edges == 13);
  check_layout(odd);
  CHECK(k4minus_extremal(8, 2).claimed_edges == 18);
  CHECK(k4minus_extremal(9, 1).claimed_edges == 16);
  for (Count n = 5; n < 16; ++n) {
    for (Count s : {1, 2}) {
      const auto c = k4minus_extremal(n, s);
      check_layout(c);
      CHECK_FALSE(contains(k4_minus(), c.hypergraph));
      CHECK_FALSE(has_matching_of_size(c.hypergraph, static_cast<std::size_t>(s + 1)));
    }
  }
  CHECK_THROWS_AS(k4minus_extremal(7, 3), InputError);
}

TEST_CASE("concluding construction") {
  const auto c = concluding_construction(20, 4, 4);
  check_layout(c);
  CHECK_FALSE(contains(full_star(4), c.hypergraph));
  CHECK_FALSE(has_matching_of_size(c.hypergraph, 5));
  for (Vertex v = 0; v < 20; ++v) {
    CHECK(graph_chromatic_number(link_graph(c.hypergraph, v)) <= 3);
  }
  CHECK_THROWS_AS(concluding_construction(20, 4, 2), InputError);
}

TEST_CASE("h_conjecture") {
  const auto fp = f_star_partition(4);
  for (Count i = 1; i <= 3; ++i) {
    const auto c = h_conjecture(fp, i, 15, 3);
    check_layout(c);
    CHECK(c.claimed_edges == (i - 1) * binomial(12, 2));
    CHECK_FALSE(has_matching_of_size(c.hypergraph, 4));
    CHECK_FALSE(contains(fp, c.hypergraph));
  }
  const auto j = h_conjecture(full_star(4), 1, 14, 2);
  CHECK(j.claimed_edges == 2 * turan_count(12, 3));
  CHECK_FALSE(contains(full_star(4), j.hypergraph));
  CHECK_THROWS_AS(h_conjecture(f32(), 1, 10, 2), InputError);
  CHECK_THROWS_AS(h_conjecture(fp, 4, 15, 3), InputError);
  CHECK_THROWS_AS(h_conjecture(fp, 1, 15, 2), InputError);
}

TEST_CASE("catalog dispatch") {
  const auto names = catalog_names();
  CHECK(names.size() == 13);
  CHECK(build({"h-ns", {{"n", 10}, {"s", 2}}}).claimed_edges == 56);
  CHECK(build({"h-a", {{"n", 10}, {"s", 2}}}).hypergraph == h_ns(10, 2).hypergraph);
  CHECK(build({"matching", {{"s", 2}}}).hypergraph == matching(3));
  const auto fp = f_star_partition(4);
  CHECK(build({"h-conjecture", {{"n", 15}, {"s", 3}, {"i", 2}}}, &fp).claimed_edges == 66);
  CHECK_THROWS_AS(build({"h-conjecture", {{"n", 15}, {"s", 3}, {"i", 2}}}), InputError);
  CHECK_THROWS_AS(build({"nope", {}}), InputError);
  CHECK_THROWS_AS(build({"h-b", {{"n", 10}}}), InputError);
}

}  // TEST_SUITE
