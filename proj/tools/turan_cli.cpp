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

// Command-line front end. Uses only the C interface in turan/turan.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "turan/turan.h"

namespace {

using nlohmann::json;

constexpr int kExitInconclusive = 2;
constexpr int kExitError = 3;

struct CallError {
  turan_status status;
  std::string message;
};

void check(turan_status s) {
  if (s != TURAN_OK) throw CallError{s, turan_last_error()};
}

struct HypergraphDeleter {
  void operator()(turan_hypergraph* h) const { turan_hypergraph_destroy(h); }
};
struct MultigraphDeleter {
  void operator()(turan_multigraph* m) const { turan_multigraph_destroy(m); }
};
using Hypergraph = std::unique_ptr<turan_hypergraph, HypergraphDeleter>;
using Multigraph = std::unique_ptr<turan_multigraph, MultigraphDeleter>;

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  turan_string_free(s);
  return out;
}

json take_json(char* s) { return json::parse(take(s)); }

Hypergraph load(const std::string& path) {
  turan_hypergraph* h = nullptr;
  check(turan_hypergraph_read(path.c_str(), &h));
  return Hypergraph(h);
}

uint64_t budget_or_default(const std::optional<uint64_t>& b, uint64_t fallback) {
  if (b) return *b;
  uint64_t out = 0;
  check(turan_default_budget(fallback, &out));
  return out;
}

std::string sidecar_path(const std::string& out) {
  const std::string ext = ".h3";
  if (out.size() > ext.size() && out.compare(out.size() - ext.size(), ext.size(), ext) == 0) {
    return out.substr(0, out.size() - ext.size()) + ".json";
  }
  return out + ".json";
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw CallError{TURAN_ERR_INPUT, "cannot write " + path};
  f << text;
}

struct ConstructArgs {
  std::string name;
  std::map<std::string, int64_t> params;
  std::optional<int64_t> n, s, t, i;
  std::vector<std::string> extra;
  std::string pattern;
  std::string output;
};

int run_construct(const ConstructArgs& a) {
  json params = json::object();
  if (a.n) params["n"] = *a.n;
  if (a.s) params["s"] = *a.s;
  if (a.t) params["t"] = *a.t;
  if (a.i) params["i"] = *a.i;
  for (const std::string& kv : a.extra) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw CallError{TURAN_ERR_INPUT, "--param expects key=value"};
    params[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
  }
  Hypergraph pattern;
  if (!a.pattern.empty()) pattern = load(a.pattern);
  turan_hypergraph* h = nullptr;
  char* info = nullptr;
  check(turan_construct(a.name.c_str(), params.dump().c_str(), pattern.get(), &h, &info));
  Hypergraph built(h);
  json meta = take_json(info);
  char* text = nullptr;
  check(turan_hypergraph_format(built.get(), &text));
  const std::string h3 = take(text);
  if (a.output.empty()) {
    std::cout << h3;
    return 0;
  }
  write_text(a.output, h3);
  const std::string side = sidecar_path(a.output);
  write_text(side, meta.dump(2) + "\n");
  std::cout << meta["name"].get<std::string>() << ": " << meta["vertices"] << " vertices, "
            << meta["edges"] << " edges (claimed " << meta["claimed_edges"] << ")\n"
            << "wrote " << a.output << " and " << side << "\n";
  return 0;
}

struct InvariantArgs {
  std::string file;
  bool nu = false, chi = false, p = false, q = false, codegree = false, links = false;
  std::optional<int64_t> partition;
};

json extended(int64_t v) { return v == TURAN_INFINITE ? json("inf") : json(v); }

int run_invariant(const InvariantArgs& a) {
  Hypergraph h = load(a.file);
  const bool all = !(a.nu || a.chi || a.p || a.q || a.codegree || a.links || a.partition);
  json out;
  uint32_t n = 0;
  size_t m = 0;
  check(turan_hypergraph_vertex_count(h.get(), &n));
  check(turan_hypergraph_edge_count(h.get(), &m));
  out["vertices"] = n;
  out["edges"] = m;
  if (all || a.nu) {
    size_t v = 0;
    check(turan_matching_number(h.get(), &v));
    out["nu"] = v;
  }
  if (all || a.chi) {
    size_t v = 0;
    check(turan_weak_chromatic_number(h.get(), &v));
    out["chi"] = v;
  }
  if (all || a.p) {
    int64_t v = 0;
    check(turan_p_value(h.get(), &v));
    out["p"] = extended(v);
  }
  if (all || a.q) {
    int64_t v = 0;
    check(turan_q_value(h.get(), &v));
    out["q"] = extended(v);
  }
  if ((all && n >= 2) || a.codegree) {
    size_t v = 0;
    check(turan_max_codegree(h.get(), &v));
    out["max_codegree"] = v;
  }
  if (a.links) {
    char* s = nullptr;
    check(turan_links_json(h.get(), &s));
    out["links"] = take_json(s);
  }
  if (a.partition) {
    char* s = nullptr;
    check(turan_degree_partition_json(h.get(), *a.partition, &s));
    out["degree_partition"] = take_json(s);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_contains(const std::string& pattern_path, const std::string& host_path) {
  Hypergraph f = load(pattern_path);
  Hypergraph h = load(host_path);
  uint32_t fn = 0;
  check(turan_hypergraph_vertex_count(f.get(), &fn));
  std::vector<uint32_t> map(fn);
  int found = 0;
  check(turan_contains(f.get(), h.get(), &found, map.data()));
  json out{{"contained", found != 0}};
  if (found) out["embedding"] = map;
  std::cout << out.dump(2) << "\n";
  return 0;
}

struct SearchArgs {
  uint32_t n = 0;
  std::optional<int64_t> s;
  std::vector<std::string> family;
  std::string witness;
  bool enumerate = false;
  std::optional<uint64_t> budget;
};

int run_search(const SearchArgs& a) {
  std::vector<Hypergraph> owned;
  std::vector<const turan_hypergraph*> family;
  for (const std::string& path : a.family) {
    owned.push_back(load(path));
    family.push_back(owned.back().get());
  }
  turan_hypergraph* w = nullptr;
  char* result = nullptr;
  check(turan_search_extremal(a.n, a.s.value_or(-1), family.data(), family.size(),
                              budget_or_default(a.budget, 200'000'000), a.enumerate ? 1 : 0,
                              &w, &result));
  Hypergraph witness(w);
  json out = take_json(result);
  if (!a.witness.empty()) check(turan_hypergraph_write(witness.get(), a.witness.c_str()));
  std::cout << out.dump(2) << "\n";
  return out.value("exact", true) ? 0 : kExitInconclusive;
}

int run_colored_max(uint32_t n, size_t s, size_t r, bool exact_k,
                    const std::optional<uint64_t>& budget) {
  char* result = nullptr;
  check(turan_colored_max(n, s, r, exact_k ? 1 : 0, budget_or_default(budget, 1'000'000'000),
                          &result));
  json out = take_json(result);
  char* bounds = nullptr;
  check(turan_colored_bounds(n, static_cast<int64_t>(s), static_cast<int64_t>(r), &bounds));
  out["bounds"] = take_json(bounds);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_star_free(const std::string& path, size_t r, bool exact_k, bool bipartite) {
  turan_multigraph* raw = nullptr;
  check(turan_multigraph_read(path.c_str(), &raw));
  Multigraph m(raw);
  int found = 0;
  char* witness = nullptr;
  check(turan_colored_clique(m.get(), r - 1, r, exact_k ? 1 : 0, bipartite ? 1 : 0, &found,
                             &witness));
  json out{{"free", found == 0}, {"r", r}};
  if (found) out["witness"] = take_json(witness);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_formulas(int64_t n, int64_t s, int64_t r) {
  char* f = nullptr;
  check(turan_formulas_json(n, s, r, &f));
  json out = take_json(f);
  char* b = nullptr;
  check(turan_colored_bounds(n, s, r, &b));
  out["colored"] = take_json(b);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_verify(const std::string& scale, const std::string& json_path,
               const std::vector<int>& criteria) {
  char* report = nullptr;
  int code = 0;
  check(turan_verify_paper(scale.c_str(), criteria.empty() ? nullptr : criteria.data(),
                           criteria.size(), &report, &code));
  const std::string text = take(report);
  if (json_path.empty() || json_path == "-") {
    std::cout << text << "\n";
    return code;
  }
  write_text(json_path, text + "\n");
  const json r = json::parse(text);
  for (const auto& c : r["certificates"]) {
    if (c["verdict"] != "pass") {
      std::cout << c["verdict"].get<std::string>() << "  " << c["id"].get<std::string>() << "\n";
    }
  }
  const auto& s = r["summary"];
  std::cout << "scale " << r["scale"]["name"].get<std::string>() << ": " << s["pass"]
            << " pass, " << s["fail"] << " fail, " << s["inconclusive"]
            << " inconclusive; report written to " << json_path << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turan-type problems for 3-graphs with bounded matching number"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(turan_version()));

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a catalog construction");
  construct->add_option("name", ca.name, "Catalog name (see 'catalog')")->required();
  construct->add_option("--n", ca.n, "Vertex count");
  construct->add_option("--s", ca.s, "Matching bound s");
  construct->add_option("--t", ca.t, "Clique or pattern size t");
  construct->add_option("-i", ca.i, "Index i for h-conjecture");
  construct->add_option("--param", ca.extra, "Extra integer parameter key=value");
  construct->add_option("-F,--pattern", ca.pattern, "Pattern .h3 for h-conjecture")
      ->check(CLI::ExistingFile);
  construct->add_option("-o,--output", ca.output, "Output .h3 (sidecar .json beside it)");

  app.add_subcommand("catalog", "List construction names");

  InvariantArgs ia;
  auto* invariant = app.add_subcommand("invariant", "Compute invariants of an .h3 file");
  invariant->add_option("file", ia.file)->required()->check(CLI::ExistingFile);
  invariant->add_flag("--nu", ia.nu, "Matching number");
  invariant->add_flag("--chi", ia.chi, "Weak chromatic number");
  invariant->add_flag("--p", ia.p, "p: fewest red vertices, no monochromatic edge");
  invariant->add_flag("--q", ia.q, "q: fewest red vertices, one red per edge");
  invariant->add_flag("--codegree", ia.codegree, "Maximum co-degree");
  invariant->add_flag("--links", ia.links, "Link graphs and their chromatic numbers");
  invariant->add_option("--partition", ia.partition, "Degree split for this s");

  std::string pattern_path, host_path;
  auto* contains = app.add_subcommand("contains", "Decide whether a pattern embeds in a host");
  contains->add_option("-F,--pattern", pattern_path)->required()->check(CLI::ExistingFile);
  contains->add_option("-H,--host", host_path)->required()->check(CLI::ExistingFile);

  SearchArgs sa;
  auto* search = app.add_subcommand("search-extremal", "Exact extremal number for small n");
  search->add_option("--n", sa.n)->required();
  search->add_option("--s", sa.s, "Forbid a matching of s+1 edges");
  search->add_option("-F,--forbid", sa.family, "Forbidden pattern .h3 (repeatable)")
      ->check(CLI::ExistingFile);
  search->add_option("--witness", sa.witness, "Write one extremal hypergraph here");
  search->add_flag("--enumerate", sa.enumerate, "List all extremal classes (n <= 6)");
  search->add_option("--budget", sa.budget, "Node budget");

  uint32_t cm_n = 0;
  size_t cm_s = 0, cm_r = 0;
  bool cm_exact = false;
  std::optional<uint64_t> cm_budget;
  auto* colored = app.add_subcommand("colored-max", "Exhaustive coloured maximum");
  colored->add_option("--n", cm_n)->required();
  colored->add_option("--s", cm_s)->required();
  colored->add_option("--r", cm_r)->required();
  colored->add_flag("--exact-k", cm_exact, "Require exactly r-1 colours");
  colored->add_option("--budget", cm_budget, "Node budget");

  std::string cmg_path;
  size_t sf_r = 0;
  bool sf_exact = false, sf_bipartite = false;
  auto* star = app.add_subcommand("star-free", "Check a .cmg file for (r-1)-star coloured K_r");
  star->add_option("file", cmg_path)->required()->check(CLI::ExistingFile);
  star->add_option("--r", sf_r)->required()->check(CLI::Range(3, 32));
  star->add_flag("--exact-k", sf_exact, "Require exactly r-1 colours");
  star->add_flag("--bipartite", sf_bipartite, "Bipartite instead of star classes");

  int64_t fn = 0, fs = 0, fr = 3;
  auto* formulas = app.add_subcommand("formulas", "Evaluate the closed-form bounds");
  formulas->add_option("--n", fn)->required();
  formulas->add_option("--s", fs)->required();
  formulas->add_option("--r", fr);

  std::string scale = "tiny", json_path;
  std::vector<int> criteria;
  auto* verify = app.add_subcommand("verify-paper", "Run the verification suite");
  verify->add_option("--scale", scale)->check(CLI::IsMember({"", "tiny", "small", "medium"}));
  verify->add_option("--json", json_path, "Write the JSON report here ('-' for stdout)");
  verify->add_option("--criterion", criteria, "Run only these criteria (1-10)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct) return run_construct(ca);
    if (app.got_subcommand("catalog")) {
      char* names = nullptr;
      check(turan_catalog_json(&names));
      for (const auto& n : take_json(names)) std::cout << n.get<std::string>() << "\n";
      return 0;
    }
    if (*invariant) return run_invariant(ia);
    if (*contains) return run_contains(pattern_path, host_path);
    if (*search) return run_search(sa);
    if (*colored) return run_colored_max(cm_n, cm_s, cm_r, cm_exact, cm_budget);
    if (*star) return run_star_free(cmg_path, sf_r, sf_exact, sf_bipartite);
    if (*formulas) return run_formulas(fn, fs, fr);
    if (*verify) return run_verify(scale, json_path, criteria);
  } catch (const CallError& e) {
    std::cerr << "error (" << turan_status_name(e.status) << "): " << e.message << "\n";
    return e.status == TURAN_ERR_RESOURCE ? kExitInconclusive : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
