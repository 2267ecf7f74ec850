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

// Exercises the exported C interface only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "turan/turan.h"

using nlohmann::json;

namespace {

json take_json(char* s) {
  REQUIRE(s != nullptr);
  json out = json::parse(s);
  turan_string_free(s);
  return out;
}

turan_hypergraph* build(const char* name, const char* params) {
  turan_hypergraph* h = nullptr;
  char* info = nullptr;
  REQUIRE(turan_construct(name, params, nullptr, &h, &info) == TURAN_OK);
  turan_string_free(info);
  return h;
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("version and status names") {
    CHECK(std::string(turan_version()) == "1.0.0");
    CHECK(std::string(turan_status_name(TURAN_OK)) == "ok");
    CHECK(std::string(turan_status_name(TURAN_ERR_PARSE)) == "parse error");
  }

  TEST_CASE("create, format and parse round trip") {
    const uint32_t triples[] = {2, 1, 0, 3, 4, 5};
    turan_hypergraph* h = nullptr;
    REQUIRE(turan_hypergraph_create(6, triples, 2, &h) == TURAN_OK);
    char* text = nullptr;
    REQUIRE(turan_hypergraph_format(h, &text) == TURAN_OK);
    CHECK(std::string(text) == "6 2\n0 1 2\n3 4 5\n");
    turan_hypergraph* back = nullptr;
    REQUIRE(turan_hypergraph_parse(text, &back) == TURAN_OK);
    turan_string_free(text);
    size_t m = 0;
    CHECK(turan_hypergraph_edge_count(back, &m) == TURAN_OK);
    CHECK(m == 2);
    uint32_t buf[3] = {};
    size_t total = 0;
    CHECK(turan_hypergraph_edges(back, buf, 1, &total) == TURAN_OK);
    CHECK(total == 2);
    CHECK(buf[2] == 2);
    size_t nu = 0;
    CHECK(turan_matching_number(h, &nu) == TURAN_OK);
    CHECK(nu == 2);
    turan_hypergraph_destroy(back);
    turan_hypergraph_destroy(h);
  }

  TEST_CASE("errors map to status codes") {
    turan_hypergraph* h = nullptr;
    CHECK(turan_hypergraph_parse("4 1\n2 1 0\n", &h) == TURAN_ERR_PARSE);
    CHECK(h == nullptr);
    CHECK(std::string(turan_last_error()).find("line 2") != std::string::npos);
    CHECK(turan_hypergraph_parse(nullptr, &h) == TURAN_ERR_NULL);
    const uint32_t bad[] = {0, 1, 9};
    CHECK(turan_hypergraph_create(4, bad, 1, &h) == TURAN_ERR_INPUT);
    char* out = nullptr;
    CHECK(turan_construct("no-such-builder", "{}", nullptr, &h, &out) == TURAN_ERR_INPUT);
    CHECK(turan_construct("h-ns", "{not json", nullptr, &h, &out) == TURAN_ERR_PARSE);
    int code = 0;
    CHECK(turan_verify_paper("huge", nullptr, 0, &out, &code) == TURAN_ERR_INPUT);
  }

  TEST_CASE("constructions report their claimed sizes") {
    turan_hypergraph* h = nullptr;
    char* info = nullptr;
    REQUIRE(turan_construct("h-ns", R"({"n":20,"s":2})", nullptr, &h, &info) == TURAN_OK);
    const json meta = take_json(info);
    size_t m = 0;
    CHECK(turan_hypergraph_edge_count(h, &m) == TURAN_OK);
    CHECK(meta["claimed_edges"].get<size_t>() == m);
    CHECK(m == 2 * 153);
    int has = 1;
    CHECK(turan_has_matching(h, 3, &has) == TURAN_OK);
    CHECK(has == 0);
    turan_hypergraph* f32 = build("f32", "{}");
    int found = 1;
    CHECK(turan_contains(f32, h, &found, nullptr) == TURAN_OK);
    CHECK(found == 0);
    turan_hypergraph_destroy(f32);
    turan_hypergraph_destroy(h);
  }

  TEST_CASE("q values and infinity") {
    turan_hypergraph* f32 = build("f32", "{}");
    int64_t q = 0;
    CHECK(turan_q_value(f32, &q) == TURAN_OK);
    CHECK(q == TURAN_INFINITE);
    turan_hypergraph* star = build("full-star", R"({"t":4})");
    CHECK(turan_q_value(star, &q) == TURAN_OK);
    CHECK(q == 1);
    turan_hypergraph_destroy(star);
    turan_hypergraph_destroy(f32);
  }

  TEST_CASE("exact search with a forbidden family") {
    turan_hypergraph* f32 = build("f32", "{}");
    const turan_hypergraph* family[] = {f32};
    turan_hypergraph* witness = nullptr;
    char* result = nullptr;
    REQUIRE(turan_search_extremal(5, 1, family, 1, 10'000'000, 1, &witness, &result) ==
            TURAN_OK);
    const json r = take_json(result);
    CHECK(r["value"] == 7);
    CHECK(r["exact"] == true);
    CHECK(r["class_count"] == 1);
    size_t m = 0;
    CHECK(turan_hypergraph_edge_count(witness, &m) == TURAN_OK);
    CHECK(m == 7);
    turan_hypergraph_destroy(witness);
    turan_hypergraph_destroy(f32);
  }

  TEST_CASE("budget exhaustion is a resource error for coloured search") {
    char* result = nullptr;
    CHECK(turan_colored_max(5, 2, 3, 0, 10, &result) == TURAN_ERR_RESOURCE);
    REQUIRE(turan_colored_max(4, 2, 3, 0, 10'000'000, &result) == TURAN_OK);
    CHECK(take_json(result)["value"] == 8);
  }

  TEST_CASE("multigraph parsing and star-coloured triangles") {
    turan_multigraph* m = nullptr;
    REQUIRE(turan_multigraph_parse("3 2\n2\n0 1\n0 2\n1\n1 2\n", &m) == TURAN_OK);
    size_t layers = 0;
    CHECK(turan_multigraph_layer_count(m, &layers) == TURAN_OK);
    CHECK(layers == 2);
    int found = 0;
    char* witness = nullptr;
    CHECK(turan_colored_clique(m, 2, 3, 0, 0, &found, &witness) == TURAN_OK);
    CHECK(found == 1);
    const json w = take_json(witness);
    CHECK(w.contains("vertices"));
    turan_multigraph_destroy(m);
  }

  TEST_CASE("verify suite through the C interface") {
    char* report = nullptr;
    int code = -1;
    const int only[] = {3, 4};
    REQUIRE(turan_verify_paper("", only, 2, &report, &code) == TURAN_OK);
    const json r = take_json(report);
    CHECK(code == 0);
    CHECK(r["scale"]["name"] == "tiny");
    for (const char* key : {"suite", "scale", "certificates", "summary"}) CHECK(r.contains(key));
  }
}
