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

#include "turan/constructions.hpp"

#include <algorithm>
#include <string>

#include "turan/colorings.hpp"
#include "turan/errors.hpp"

namespace turan {
namespace {

Count param(const Params& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw InputError("missing parameter '" + key + "'");
  return it->second;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

Vertex as_vertex_count(Count n) {
  require(n >= 0 && n <= static_cast<Count>(UINT32_MAX),
          "vertex count out of range: " + std::to_string(n));
  return static_cast<Vertex>(n);
}

// Labels "<prefix>1".."<prefix>k" for the parts of T(size, k) placed at
// [offset, offset + size).
void label_turan_parts(std::vector<std::string>& labels, Vertex offset,
                       Vertex size, Vertex parts, const std::string& prefix) {
  for (Vertex v = 0; v < size; ++v) {
    labels[offset + v] = prefix + std::to_string(v % parts + 1);
  }
}

std::vector<Pair> shifted(const Graph2& g, Vertex offset) {
  std::vector<Pair> out;
  out.reserve(g.edge_count());
  for (const Pair& p : g.edges()) out.push_back({p.u + offset, p.v + offset});
  return out;
}

BuiltConstruction finish(std::string name, Params params, Vertex n,
                         std::vector<Triple> edges,
                         std::vector<std::string> labels, Count claimed) {
  BuiltConstruction out;
  out.name = std::move(name);
  out.params = std::move(params);
  out.hypergraph = Hypergraph3(n, std::move(edges));
  out.part_labels = std::move(labels);
  out.claimed_edges = claimed;
  return out;
}

}  // namespace

Graph2 turan_graph(Vertex n, Vertex t) {
  require(t > 0 || n == 0, "turan graph needs t >= 1 when n > 0");
  std::vector<Pair> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (u % t != v % t) pairs.push_back({u, v});
    }
  }
  return Graph2(n, std::move(pairs));
}

Count turan_count(Count n, Count t) {
  require(n >= 0, "turan count needs n >= 0");
  if (n == 0) return 0;
  require(t > 0, "turan count needs t >= 1 when n > 0");
  const Count q = n / t;
  const Count r = n % t;
  const Count squares = checked_add(checked_mul(r, checked_mul(q + 1, q + 1)),
                                    checked_mul(t - r, checked_mul(q, q)));
  return (checked_mul(n, n) - squares) / 2;
}

Hypergraph3 matching(std::size_t size) {
  std::vector<Triple> edges;
  for (Vertex i = 0; i < size; ++i) edges.push_back({3 * i, 3 * i + 1, 3 * i + 2});
  return Hypergraph3(static_cast<Vertex>(3 * size), std::move(edges));
}

Hypergraph3 f_star_partition(Vertex t) {
  require(t >= 3, "star partition pattern needs t >= 3");
  // a_1..a_{t-1} -> 0..t-2, clique vertex k in [1, t] -> t-2+k.
  std::vector<Triple> edges;
  for (Vertex i = 1; i < t; ++i) {
    for (Vertex j = i + 1; j <= t; ++j) edges.push_back({i - 1, t - 2 + i, t - 2 + j});
  }
  return Hypergraph3(2 * t - 1, std::move(edges));
}

Hypergraph3 f_matching_partition(Vertex t) {
  require(t >= 2, "matching partition pattern needs t >= 2");
  const Vertex rounds = 2 * t - 1;
  const Vertex base = rounds;  // clique vertices start after a_1..a_{2t-1}
  std::vector<Triple> edges;
  // Circle method: round r pairs the fixed vertex 2t-1 with r, and
  // (r+k, r-k) mod 2t-1 for k = 1..t-1.
  for (Vertex r = 0; r < rounds; ++r) {
    edges.push_back(make_triple(r, base + r, base + rounds));
    for (Vertex k = 1; k < t; ++k) {
      const Vertex x = (r + k) % rounds;
      const Vertex y = (r + rounds - k) % rounds;
      edges.push_back(make_triple(r, base + x, base + y));
    }
  }
  return Hypergraph3(base + 2 * t, std::move(edges));
}

Hypergraph3 full_star(Vertex t) {
  require(t >= 2, "full star needs t >= 2");
  std::vector<Triple> edges;
  for (Vertex a = 1; a <= t; ++a) {
    for (Vertex b = a + 1; b <= t; ++b) edges.push_back({0, a, b});
  }
  return Hypergraph3(t + 1, std::move(edges));
}

Hypergraph3 j_plus(Vertex t) {
  require(t >= 3, "full star plus an edge needs t >= 3");
  const Hypergraph3 star = full_star(t);
  std::vector<Triple> edges(star.edges().begin(), star.edges().end());
  edges.push_back({1, 2, 3});
  return Hypergraph3(t + 1, std::move(edges));
}

Hypergraph3 k4_minus() { return full_star(3); }

Hypergraph3 f32() { return Hypergraph3(5, {{0, 1, 2}, {0, 3, 4}, {1, 3, 4}, {2, 3, 4}}); }

VertexSet BuiltConstruction::part(std::string_view label) const {
  VertexSet out;
  for (Vertex v = 0; v < part_labels.size(); ++v) {
    if (part_labels[v] == label) out.push_back(v);
  }
  return out;
}

Count h_conjecture_edges(const Hypergraph3& pattern, Count i, Count n, Count s) {
  require(n >= s && s >= 0, "h-conjecture needs n >= s >= 0");
  require(hypergraph_chromatic_number(pattern) == 2,
          "h-conjecture needs a pattern with weak chromatic number 2");
  const ExtendedCount q = q_value(pattern).red_count;
  require(!q.is_infinite(), "h-conjecture needs a finite strong colouring count");
  require(static_cast<Count>(q.value()) <= s, "h-conjecture needs q <= s");
  require(i >= 1 && i <= static_cast<Count>(q.value()),
          "h-conjecture needs 1 <= i <= q");
  const auto profile = link_chromatic_profile(pattern);
  const auto ell = static_cast<Count>(profile.values[static_cast<std::size_t>(i - 1)]);
  require(ell >= 2, "h-conjecture needs a link chromatic number >= 2");
  return checked_add(checked_mul(i - 1, binomial(n - s, 2)),
                     checked_mul(s - i + 1, turan_count(n - s, ell - 1)));
}

BuiltConstruction h_conjecture(const Hypergraph3& pattern, Count i, Count n,
                               Count s) {
  const Count claimed = h_conjecture_edges(pattern, i, n, s);
  const auto profile = link_chromatic_profile(pattern);
  const auto parts = static_cast<Vertex>(profile.values[static_cast<std::size_t>(i - 1)] - 1);
  const Vertex nv = as_vertex_count(n);
  const auto sv = static_cast<Vertex>(s);
  const auto a1_end = static_cast<Vertex>(i - 1);
  std::vector<std::string> labels(nv, "B");
  std::fill_n(labels.begin(), a1_end, "A1");
  std::fill(labels.begin() + a1_end, labels.begin() + sv, "A2");

  std::vector<Triple> edges;
  for (Vertex a = 0; a < a1_end; ++a) {
    for (Vertex x = sv; x < nv; ++x) {
      for (Vertex y = x + 1; y < nv; ++y) edges.push_back({a, x, y});
    }
  }
  const auto b_edges = shifted(turan_graph(nv - sv, parts), sv);
  for (Vertex a = a1_end; a < sv; ++a) {
    for (const Pair& p : b_edges) edges.push_back({a, p.u, p.v});
  }
  return finish("h-conjecture", {{"i", i}, {"n", n}, {"s", s}}, nv,
                std::move(edges), std::move(labels), claimed);
}

BuiltConstruction h_ns(Count n, Count s) {
  require(n > s && s >= 0, "h-ns needs n > s >= 0");
  const Vertex nv = as_vertex_count(n);
  const auto sv = static_cast<Vertex>(s);
  std::vector<std::string> labels(nv, "B");
  std::fill_n(labels.begin(), sv, "A");
  std::vector<Triple> edges;
  for (Vertex a = 0; a < sv; ++a) {
    for (Vertex x = sv; x < nv; ++x) {
      for (Vertex y = x + 1; y < nv; ++y) edges.push_back({a, x, y});
    }
  }
  return finish("h-ns", {{"n", n}, {"s", s}}, nv, std::move(edges),
                std::move(labels), checked_mul(s, binomial(n - s, 2)));
}

BuiltConstruction h_b(Count n, Count s, Count t) {
  require(n > s && s >= t - 1 && t - 1 >= 2, "h-b needs n > s >= t-1 >= 2");
  const Vertex nv = as_vertex_count(n);
  const auto sv = static_cast<Vertex>(s);
  const auto parts = static_cast<Vertex>(t - 1);
  std::vector<std::string> labels(nv);
  std::fill_n(labels.begin(), sv, "U");
  label_turan_parts(labels, sv, nv - sv, parts, "V");
  std::vector<Triple> edges;
  const auto b_edges = shifted(turan_graph(nv - sv, parts), sv);
  for (Vertex u = 0; u < sv; ++u) {
    for (const Pair& p : b_edges) edges.push_back({u, p.u, p.v});
  }
  return finish("h-b", {{"n", n}, {"s", s}, {"t", t}}, nv, std::move(edges),
                std::move(labels), checked_mul(s, turan_count(n - s, t - 1)));
}

BuiltConstruction k4minus_extremal(Count n, Count s) {
  require(s == 1 || s == 2, "k4minus-extremal needs s in {1, 2}");
  require(n >= 5, "k4minus-extremal needs n >= 5");
  const Vertex nv = as_vertex_count(n);
  std::vector<Triple> edges;
  std::vector<std::string> labels(nv);
  if (s == 2 && n % 2 == 1) {
    // x1 = 0, x2 = 1, apex z = 2, V1 and V2 of size (n-3)/2 each.
    const Vertex half = (nv - 3) / 2;
    const Vertex v1 = 3;
    const Vertex v2 = 3 + half;
    labels[0] = labels[1] = "X";
    labels[2] = "Z";
    std::fill(labels.begin() + v1, labels.begin() + v2, "V1");
    std::fill(labels.begin() + v2, labels.end(), "V2");
    for (Vertex x = 0; x < 2; ++x) {
      for (Vertex a = v1; a < v2; ++a) {
        for (Vertex b = v2; b < nv; ++b) edges.push_back({x, a, b});
      }
    }
    edges.push_back({0, 1, 2});
    for (Vertex a = v1; a < v2; ++a) edges.push_back({0, 2, a});
    for (Vertex b = v2; b < nv; ++b) edges.push_back({1, 2, b});
    return finish("k4minus-extremal", {{"n", n}, {"s", s}}, nv, std::move(edges),
                  std::move(labels),
                  checked_add(checked_mul(2, floor_div(checked_mul(n - 2, n - 2), 4)), 1));
  }
  const auto sv = static_cast<Vertex>(s);
  const Vertex small = (nv - sv) / 2;
  const Vertex v2 = sv + small;
  std::fill_n(labels.begin(), sv, "A");
  std::fill(labels.begin() + sv, labels.begin() + v2, "V1");
  std::fill(labels.begin() + v2, labels.end(), "V2");
  for (Vertex a = 0; a < sv; ++a) {
    for (Vertex x = sv; x < v2; ++x) {
      for (Vertex y = v2; y < nv; ++y) edges.push_back({a, x, y});
    }
  }
  return finish("k4minus-extremal", {{"n", n}, {"s", s}}, nv, std::move(edges),
                std::move(labels),
                checked_mul(s, floor_div(checked_mul(n - s, n - s), 4)));
}

BuiltConstruction concluding_construction(Count n, Count s, Count t) {
  require(t >= 3, "concluding construction needs t >= 3");
  require(n > s && s >= 1, "concluding construction needs n > s >= 1");
  const Vertex nv = as_vertex_count(n);
  const auto sv = static_cast<Vertex>(s);
  const auto b_parts = static_cast<Vertex>(t - 1);
  const auto a_parts = static_cast<Vertex>(t - 2);
  const Vertex b_size = nv - sv;
  // Round-robin parts: the first b_size mod (t-1) parts are the large ones,
  // so the first small part has that index.
  const Vertex fixed = b_size % b_parts;

  std::vector<std::string> labels(nv);
  label_turan_parts(labels, 0, sv, a_parts, "A");
  label_turan_parts(labels, sv, b_size, b_parts, "V");

  std::vector<Triple> edges;
  const auto b_edges = shifted(turan_graph(b_size, b_parts), sv);
  for (Vertex a = 0; a < sv; ++a) {
    for (const Pair& p : b_edges) edges.push_back({a, p.u, p.v});
  }
  const Graph2 a_graph = turan_graph(sv, a_parts);
  for (const Pair& p : a_graph.edges()) {
    for (Vertex b = sv; b < nv; ++b) {
      if ((b - sv) % b_parts == fixed) continue;
      edges.push_back({p.u, p.v, b});
    }
  }
  const Count fixed_size = (n - s) / (t - 1);
  const Count claimed =
      checked_add(checked_mul(s, turan_count(n - s, t - 1)),
                  checked_mul(n - s - fixed_size, turan_count(s, t - 2)));
  return finish("concluding",
                {{"n", n}, {"s", s}, {"t", t}, {"fixed_part", fixed + 1}}, nv,
                std::move(edges), std::move(labels), claimed);
}

BuiltConstruction build_pattern(std::string_view name, const Params& params) {
  const std::string key(name);
  if (key == "matching") {
    const Count s = param(params, "s");
    require(s >= -1, "matching needs s + 1 >= 0");
    const Hypergraph3 h = matching(static_cast<std::size_t>(s + 1));
    std::vector<std::string> labels;
    for (Vertex v = 0; v < h.vertex_count(); ++v) labels.push_back("E" + std::to_string(v / 3 + 1));
    return finish(key, {{"s", s}}, h.vertex_count(),
                  {h.edges().begin(), h.edges().end()}, std::move(labels), s + 1);
  }
  if (key == "f-star-partition" || key == "f-matching-partition") {
    const Count t = param(params, "t");
    require(t >= 2 && t < 1 << 15, "pattern parameter t out of range");
    const bool star = key == "f-star-partition";
    const Hypergraph3 h = star ? f_star_partition(static_cast<Vertex>(t))
                               : f_matching_partition(static_cast<Vertex>(t));
    const Count apexes = star ? t - 1 : 2 * t - 1;
    std::vector<std::string> labels(h.vertex_count(), "K");
    std::fill_n(labels.begin(), apexes, "a");
    const Count claimed = star ? binomial(t, 2) : t * (2 * t - 1);
    return finish(key, {{"t", t}}, h.vertex_count(),
                  {h.edges().begin(), h.edges().end()}, std::move(labels), claimed);
  }
  if (key == "full-star" || key == "j-plus" || key == "k4-minus") {
    const Count t = key == "k4-minus" ? 3 : param(params, "t");
    require(t >= 2 && t < 1 << 15, "pattern parameter t out of range");
    const bool plus = key == "j-plus";
    const Hypergraph3 h = plus ? j_plus(static_cast<Vertex>(t))
                               : full_star(static_cast<Vertex>(t));
    std::vector<std::string> labels(h.vertex_count(), "leaf");
    labels[0] = "center";
    Params used;
    if (key != "k4-minus") used["t"] = t;
    return finish(key, used, h.vertex_count(),
                  {h.edges().begin(), h.edges().end()}, std::move(labels),
                  binomial(t, 2) + (plus ? 1 : 0));
  }
  if (key == "f32") {
    const Hypergraph3 h = f32();
    return finish(key, {}, 5, {h.edges().begin(), h.edges().end()},
                  std::vector<std::string>(5, "V"), 4);
  }
  throw InputError("unknown pattern '" + key + "'");
}

BuiltConstruction build(const ConstructionSpec& spec, const Hypergraph3* pattern) {
  const Params& p = spec.params;
  if (spec.name == "h-conjecture") {
    if (pattern == nullptr) throw InputError("h-conjecture needs a pattern");
    return h_conjecture(*pattern, param(p, "i"), param(p, "n"), param(p, "s"));
  }
  if (spec.name == "h-ns" || spec.name == "h-a") {
    return h_ns(param(p, "n"), param(p, "s"));
  }
  if (spec.name == "h-b") return h_b(param(p, "n"), param(p, "s"), param(p, "t"));
  if (spec.name == "k4minus-extremal") {
    return k4minus_extremal(param(p, "n"), param(p, "s"));
  }
  if (spec.name == "concluding") {
    return concluding_construction(param(p, "n"), param(p, "s"), param(p, "t"));
  }
  return build_pattern(spec.name, p);
}

std::vector<std::string> catalog_names() {
  return {"matching",     "f-star-partition", "f-matching-partition",
          "full-star",    "j-plus",           "k4-minus",
          "f32",          "h-conjecture",     "h-ns",
          "h-a",          "h-b",              "k4minus-extremal",
          "concluding"};
}

}  // namespace turan
