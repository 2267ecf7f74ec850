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

#include "turan/turan.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "json.hpp"
#include "turan/colored_turan.hpp"
#include "turan/colorings.hpp"
#include "turan/constructions.hpp"
#include "turan/containment.hpp"
#include "turan/errors.hpp"
#include "turan/extremal_search.hpp"
#include "turan/formulas.hpp"
#include "turan/io.hpp"
#include "turan/matching.hpp"
#include "turan/report.hpp"

struct turan_hypergraph {
  turan::Hypergraph3 value;
};

struct turan_multigraph {
  turan::ColoredMultigraph value;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;

class NullArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class T>
void need(T* p, const char* what) {
  if (p == nullptr) throw NullArgument(std::string(what) + " must not be NULL");
}

template <class F>
turan_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return TURAN_OK;
  } catch (const NullArgument& e) {
    last_error = e.what();
    return TURAN_ERR_NULL;
  } catch (const turan::InputError& e) {
    last_error = e.what();
    return TURAN_ERR_INPUT;
  } catch (const turan::ParseError& e) {
    last_error = e.what();
    return TURAN_ERR_PARSE;
  } catch (const json::exception& e) {
    last_error = e.what();
    return TURAN_ERR_PARSE;
  } catch (const turan::ResourceExhausted& e) {
    last_error = e.what();
    return TURAN_ERR_RESOURCE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TURAN_ERR_RESOURCE;
  } catch (const std::overflow_error& e) {
    last_error = e.what();
    return TURAN_ERR_OVERFLOW;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TURAN_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return TURAN_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json edges_json(const turan::Hypergraph3& h) { return json(h.edges()); }

json graph_json(const turan::Graph2& g) {
  json edges = json::array();
  for (const turan::Pair& p : g.edges()) edges.push_back({p.u, p.v});
  return edges;
}

std::int64_t extended(const turan::ExtendedCount& c) {
  return c.is_infinite() ? TURAN_INFINITE : static_cast<std::int64_t>(c.value());
}

}  // namespace

extern "C" {

const char* turan_last_error(void) { return last_error.c_str(); }

const char* turan_status_name(turan_status status) {
  switch (status) {
    case TURAN_OK: return "ok";
    case TURAN_ERR_INPUT: return "input error";
    case TURAN_ERR_PARSE: return "parse error";
    case TURAN_ERR_RESOURCE: return "resource exhausted";
    case TURAN_ERR_OVERFLOW: return "overflow";
    case TURAN_ERR_NULL: return "null argument";
    case TURAN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* turan_version(void) { return "1.0.0"; }

void turan_string_free(char* s) { std::free(s); }

turan_status turan_default_budget(uint64_t fallback, uint64_t* out) {
  return guard([&] {
    need(out, "out");
    *out = turan::default_node_budget(fallback);
  });
}

turan_status turan_hypergraph_create(uint32_t n, const uint32_t* triples, size_t m,
                                     turan_hypergraph** out) {
  return guard([&] {
    need(out, "out");
    if (m > 0) need(triples, "triples");
    std::vector<turan::Triple> edges;
    edges.reserve(m);
    for (size_t i = 0; i < m; ++i) {
      edges.push_back(turan::make_triple(triples[3 * i], triples[3 * i + 1], triples[3 * i + 2]));
    }
    *out = new turan_hypergraph{turan::Hypergraph3(n, std::move(edges))};
  });
}

turan_status turan_hypergraph_read(const char* path, turan_hypergraph** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new turan_hypergraph{turan::read_h3_file(path)};
  });
}

turan_status turan_hypergraph_parse(const char* text, turan_hypergraph** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    std::istringstream in(text);
    *out = new turan_hypergraph{turan::read_h3(in)};
  });
}

turan_status turan_hypergraph_write(const turan_hypergraph* h, const char* path) {
  return guard([&] {
    need(h, "hypergraph");
    need(path, "path");
    turan::write_h3_file(path, h->value);
  });
}

turan_status turan_hypergraph_format(const turan_hypergraph* h, char** text) {
  return guard([&] {
    need(h, "hypergraph");
    need(text, "text");
    std::ostringstream out;
    turan::write_h3(out, h->value);
    *text = dup_string(out.str());
  });
}

void turan_hypergraph_destroy(turan_hypergraph* h) { delete h; }

turan_status turan_hypergraph_vertex_count(const turan_hypergraph* h, uint32_t* out) {
  return guard([&] {
    need(h, "hypergraph");
    need(out, "out");
    *out = h->value.vertex_count();
  });
}

turan_status turan_hypergraph_edge_count(const turan_hypergraph* h, size_t* out) {
  return guard([&] {
    need(h, "hypergraph");
    need(out, "out");
    *out = h->value.edge_count();
  });
}

turan_status turan_hypergraph_edges(const turan_hypergraph* h, uint32_t* buffer,
                                    size_t capacity, size_t* total) {
  return guard([&] {
    need(h, "hypergraph");
    need(total, "total");
    if (capacity > 0) need(buffer, "buffer");
    const auto edges = h->value.edges();
    *total = edges.size();
    for (size_t i = 0; i < edges.size() && i < capacity; ++i) {
      for (int j = 0; j < 3; ++j) buffer[3 * i + j] = edges[i][j];
    }
  });
}

turan_status turan_matching_number(const turan_hypergraph* h, size_t* out) {
  return guard([&] {
    need(h, "hypergraph");
    need(out, "out");
    *out = turan::matching_number(h->value);
  });
}

turan_status turan_has_matching(const turan_hypergraph* h, size_t k, int* out) {
  return guard([&] {
    need(h, "hypergraph");
    need(out, "out");
    *out = turan::has_matching_of_size(h->value, k) ? 1 : 0;
  });
}

turan_status turan_max_codegree(const turan_hypergraph* h, size_t* out) {
  return guard([&] {
    need(h, "hypergraph");
    need(out, "out");
    *out = turan::max_codegree(h->value);
  });
}

turan_status turan_weak_chromatic_number(const turan_hypergraph* h, size_t* out) {
  return guard([&] {
    need(h, "hypergraph");
    need(out, "out");
    *out = turan::hypergraph_chromatic_number(h->value);
  });
}

turan_status turan_p_value(const turan_hypergraph* h, int64_t* out) {
  return guard([&] {
    need(h, "hypergraph");
    need(out, "out");
    *out = extended(turan::p_value(h->value).red_count);
  });
}

turan_status turan_q_value(const turan_hypergraph* h, int64_t* out) {
  return guard([&] {
    need(h, "hypergraph");
    need(out, "out");
    *out = extended(turan::q_value(h->value).red_count);
  });
}

turan_status turan_links_json(const turan_hypergraph* h, char** out) {
  return guard([&] {
    need(h, "hypergraph");
    need(out, "out");
    const auto profile = turan::link_chromatic_profile(h->value);
    json links = json::array();
    for (turan::Vertex v = 0; v < h->value.vertex_count(); ++v) {
      const auto link = turan::link_graph(h->value, v);
      links.push_back({{"vertex", v},
                       {"edges", graph_json(link)},
                       {"chromatic_number", turan::graph_chromatic_number(link)}});
    }
    *out = dup_string(json{{"links", links},
                           {"ordering", profile.ordering},
                           {"values", profile.values}}
                          .dump());
  });
}

turan_status turan_degree_partition_json(const turan_hypergraph* h, int64_t s, char** out) {
  return guard([&] {
    need(h, "hypergraph");
    need(out, "out");
    const auto p = turan::degree_partition(h->value, s);
    *out = dup_string(json{{"threshold", p.threshold},
                           {"high", p.high},
                           {"low", p.low},
                           {"low_edges", turan::induced(h->value, p.low).edge_count()},
                           {"low_weakly_independent",
                            turan::is_weakly_independent(h->value, p.low)}}
                          .dump());
  });
}

turan_status turan_contains(const turan_hypergraph* pattern, const turan_hypergraph* host,
                            int* found, uint32_t* embedding) {
  return guard([&] {
    need(pattern, "pattern");
    need(host, "host");
    need(found, "found");
    const auto e = turan::find_embedding(pattern->value, host->value);
    *found = e ? 1 : 0;
    if (e && embedding != nullptr) std::copy(e->begin(), e->end(), embedding);
  });
}

turan_status turan_construct(const char* name, const char* params_json,
                             const turan_hypergraph* pattern, turan_hypergraph** out,
                             char** info) {
  return guard([&] {
    need(name, "name");
    need(out, "out");
    turan::ConstructionSpec spec;
    spec.name = name;
    if (params_json != nullptr && *params_json != '\0') {
      const json p = json::parse(params_json);
      if (!p.is_object()) throw turan::InputError("parameters must be a JSON object");
      for (const auto& [k, v] : p.items()) {
        if (!v.is_number_integer()) {
          throw turan::InputError("parameter '" + k + "' must be an integer");
        }
        spec.params[k] = v.get<turan::Count>();
      }
    }
    auto built = turan::build(spec, pattern ? &pattern->value : nullptr);
    if (info != nullptr) {
      *info = dup_string(json{{"name", built.name},
                              {"params", built.params},
                              {"vertices", built.hypergraph.vertex_count()},
                              {"edges", built.hypergraph.edge_count()},
                              {"claimed_edges", built.claimed_edges},
                              {"part_labels", built.part_labels}}
                             .dump());
    }
    *out = new turan_hypergraph{std::move(built.hypergraph)};
  });
}

turan_status turan_catalog_json(char** out) {
  return guard([&] {
    need(out, "out");
    *out = dup_string(json(turan::catalog_names()).dump());
  });
}

turan_status turan_search_extremal(uint32_t n, int64_t matching_bound,
                                   const turan_hypergraph* const* family, size_t family_size,
                                   uint64_t budget, int enumerate, turan_hypergraph** witness,
                                   char** result) {
  return guard([&] {
    need(result, "result");
    if (family_size > 0) need(family, "family");
    turan::SearchInstance inst;
    inst.n = n;
    if (matching_bound >= 0) inst.matching_bound = static_cast<std::size_t>(matching_bound);
    for (size_t i = 0; i < family_size; ++i) {
      need(family[i], "family member");
      inst.family.push_back(family[i]->value);
    }
    inst.budget = budget;
    json out;
    turan::Hypergraph3 best;
    if (enumerate) {
      const auto r = turan::enumerate_extremal(inst);
      json classes = json::array();
      for (const auto& c : r.classes) classes.push_back(edges_json(c));
      out = {{"value", r.value}, {"exact", r.exact}, {"nodes", r.nodes},
             {"classes", classes}, {"class_count", r.classes.size()}};
      if (!r.classes.empty()) best = r.classes.front();
    } else {
      const auto r = turan::solve(inst);
      out = {{"value", r.value}, {"exact", r.exact}, {"nodes", r.nodes},
             {"witness", edges_json(r.witness)}};
      best = r.witness;
    }
    *result = dup_string(out.dump());
    if (witness != nullptr) *witness = new turan_hypergraph{std::move(best)};
  });
}

turan_status turan_multigraph_read(const char* path, turan_multigraph** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new turan_multigraph{turan::read_cmg_file(path)};
  });
}

turan_status turan_multigraph_parse(const char* text, turan_multigraph** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    std::istringstream in(text);
    *out = new turan_multigraph{turan::read_cmg(in)};
  });
}

void turan_multigraph_destroy(turan_multigraph* m) { delete m; }

turan_status turan_multigraph_layer_count(const turan_multigraph* m, size_t* out) {
  return guard([&] {
    need(m, "multigraph");
    need(out, "out");
    *out = m->value.layer_count();
  });
}

turan_status turan_colored_clique(const turan_multigraph* m, size_t k, size_t t,
                                  int exact_k, int bipartite, int* found, char** witness) {
  return guard([&] {
    need(m, "multigraph");
    need(found, "found");
    const auto shape = bipartite ? turan::ClassShape::bipartite : turan::ClassShape::star;
    const auto w = turan::find_colored_clique(m->value, k, t, exact_k != 0, shape);
    *found = w ? 1 : 0;
    if (w && witness != nullptr) {
      json assignment = json::array();
      for (const auto& [p, c] : w->assignment) {
        assignment.push_back({{"pair", {p.u, p.v}}, {"layer", c}});
      }
      *witness = dup_string(json{{"vertices", w->vertices}, {"assignment", assignment}}.dump());
    }
  });
}

turan_status turan_colored_max(uint32_t n, size_t s, size_t r, int exact_k, uint64_t budget,
                               char** result) {
  return guard([&] {
    need(result, "result");
    const auto res = turan::max_colored_sum(n, s, r, exact_k != 0, budget);
    json layers = json::array();
    for (const auto& g : res.witness) layers.push_back(graph_json(g));
    *result = dup_string(
        json{{"value", res.value}, {"nodes", res.nodes}, {"witness", layers}}.dump());
  });
}

turan_status turan_colored_bounds(int64_t n, int64_t s, int64_t r, char** out) {
  return guard([&] {
    need(out, "out");
    auto pack = [](const turan::EvaluatedBound& b) {
      return json{{"value", b.value}, {"in_range", b.in_range}};
    };
    *out = dup_string(json{{"upper", pack(turan::star_colored_upper_bound(n, s, r))},
                           {"triangle", pack(turan::two_star_triangle_bound(n, s))},
                           {"conjectured", pack(turan::star_colored_conjectured_bound(n, s, r))}}
                          .dump());
  });
}

turan_status turan_formulas_json(int64_t n, int64_t s, int64_t r, char** out) {
  return guard([&] {
    need(out, "out");
    const auto emc = turan::formula_emc(n, s, r);
    *out = dup_string(json{{"emc", {{"value", emc.value}, {"in_range", emc.in_range}}},
                           {"small_s", turan::formula_gerbner_small_s(n, s, r)},
                           {"linear", turan::formula_gerbner_linear(n, s, r)}}
                          .dump());
  });
}

turan_status turan_verify_paper(const char* scale, const int* criteria, size_t criteria_count,
                                char** report, int* exit_code) {
  return guard([&] {
    need(report, "report");
    std::vector<int> only;
    if (criteria_count > 0) {
      need(criteria, "criteria");
      only.assign(criteria, criteria + criteria_count);
    }
    const auto r = turan::verify_paper(turan::parse_scale(scale ? scale : ""), only);
    *report = dup_string(r.to_json().dump(2));
    if (exit_code != nullptr) *exit_code = r.exit_code();
  });
}

}  // extern "C"
