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
#include "turan/constructions.hpp"
#include "turan/containment.hpp"
#include "turan/errors.hpp"
#include "turan/extremal_search.hpp"
#include "turan/formulas.hpp"
#include "turan/matching.hpp"
#include "turan_reference.hpp"

using namespace turan;
using turan::testing::random_hypergraph;

namespace {

SearchInstance instance(Vertex n, std::vector<Hypergraph3> family,
                        std::optional<std::size_t> s) {
  SearchInstance inst;
  inst.n = n;
  inst.family = std::move(family);
  inst.matching_bound = s;
  return inst;
}

void check_witness(const SearchInstance& inst, const SearchResult& r) {
  CHECK(static_cast<Count>(r.witness.edge_count()) == r.value);
  CHECK(r.witness.vertex_count() == inst.n);
  CHECK(family_free(inst.family, r.witness).free());
  if (inst.matching_bound) {
    CHECK_FALSE(has_matching_of_size(r.witness, *inst.matching_bound + 1));
  }
}

}  // namespace

TEST_SUITE("extremal_search") {

TEST_CASE("intersecting families") {
  const auto five = instance(5, {}, 1);
  const auto r5 = solve(five);
  CHECK(r5.value == 10);
  CHECK(r5.exact);
  check_witness(five, r5);
  const auto six = instance(6, {}, 1);
  const auto r6 = solve(six);
  CHECK(r6.value == 10);
  CHECK(r6.value == formula_emc(6, 1, 3).value);
  check_witness(six, r6);
}

TEST_CASE("frozen small values") {
  // Values recomputed by the 2^C(n,3) oracle; none is a closed-form claim.
  CHECK(solve(instance(5, {f32()}, 1)).value == 7);
  CHECK(solve(instance(6, {f32()}, 1)).value == 10);
  CHECK(solve(instance(6, {k4_minus()}, 2)).value == 10);
  CHECK(solve(instance(7, {}, 1)).value == 15);
  CHECK(solve(instance(4, {}, std::nullopt)).value == 4);
  CHECK(solve(instance(6, {}, 0)).value == 0);
  CHECK(solve(instance(2, {}, 1)).value == 0);
}

TEST_CASE("lower bounds from constructions") {
  for (Vertex n : {5u, 6u}) {
    CHECK(solve(instance(n, {f32()}, 1)).value >= binomial(n - 1, 2));
  }
  CHECK(solve(instance(6, {f32()}, 1)).value >= h_ns(6, 1).claimed_edges);
  CHECK(solve(instance(6, {k4_minus()}, 2)).value >= k4minus_extremal(6, 2).claimed_edges);
  CHECK(solve(instance(7, {k4_minus()}, 2)).value >= k4minus_extremal(7, 2).claimed_edges);
}

TEST_CASE("agrees with the direct enumeration oracle") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 20; ++i) {
    std::vector<Hypergraph3> family;
    const std::size_t members = 1 + rng() % 2;
    while (family.size() < members) {
      const Vertex fn = 3 + static_cast<Vertex>(rng() % 3);
      auto f = random_hypergraph(rng, fn, 0.5);
      if (f.edge_count() > 0) family.push_back(std::move(f));
    }
    for (Vertex n = 3; n <= 5; ++n) {
      const std::optional<std::size_t> s =
          rng() % 3 == 0 ? std::nullopt : std::optional<std::size_t>(rng() % 2);
      const auto inst = instance(n, family, s);
      const auto got = solve(inst);
      CHECK(got.value == static_cast<Count>(reference::extremal_number(n, family, s)));
      check_witness(inst, got);
    }
  }
}

TEST_CASE("monotone in n and s") {
  Count previous = 0;
  for (Vertex n = 3; n <= 7; ++n) {
    const Count v = solve(instance(n, {k4_minus()}, 1)).value;
    CHECK(v >= previous);
    CHECK(solve(instance(n, {k4_minus()}, 2)).value >= v);
    previous = v;
  }
}

TEST_CASE("isomorphism classes of extremal hypergraphs") {
  const auto k5 = enumerate_extremal(instance(5, {}, 1));
  REQUIRE(k5.classes.size() == 1);
  CHECK(k5.classes[0].edge_count() == 10);
  const auto six = enumerate_extremal(instance(6, {}, 1));
  CHECK(six.value == 10);
  CHECK(six.classes.size() == 13);
  CHECK(std::find(six.classes.begin(), six.classes.end(),
                  canonical_form(full_star(5))) != six.classes.end());
  const auto f = enumerate_extremal(instance(5, {f32()}, 1));
  CHECK(f.value == 7);
  CHECK(f.classes.size() == 1);
  CHECK(enumerate_extremal(instance(6, {f32()}, 1)).classes.size() == 3);
  CHECK(enumerate_extremal(instance(6, {k4_minus()}, 2)).classes.size() == 1);
}

TEST_CASE("budget and limits") {
  auto inst = instance(7, {}, 1);
  inst.budget = 50;
  const auto r = solve(inst);
  CHECK_FALSE(r.exact);
  check_witness(inst, r);
  CHECK_THROWS_AS(solve(instance(8, {}, 1)), InputError);
  auto big = instance(8, {}, 1);
  big.max_vertices = 9;
  CHECK_THROWS_AS(solve(big), InputError);
  CHECK_THROWS_AS(solve(instance(5, {Hypergraph3(3)}, 1)), InputError);
  CHECK_THROWS_AS(solve(instance(5, {matching(3)}, 1)), InputError);
  CHECK_THROWS_AS(enumerate_extremal(instance(7, {}, 1)), InputError);
}

TEST_CASE("canonical form is a relabelling invariant") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 20; ++i) {
    const auto h = random_hypergraph(rng, 6, 0.3);
    std::vector<Vertex> perm{0, 1, 2, 3, 4, 5};
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(relabel(h, perm)) == canonical_form(h));
  }
}

}  // TEST_SUITE
