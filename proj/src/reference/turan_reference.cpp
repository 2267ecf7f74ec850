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

#include "turan_reference.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace turan::reference {
namespace {

bool edge_in(const std::vector<Triple>& edges, Triple t) {
  std::sort(t.begin(), t.end());
  return std::find(edges.begin(), edges.end(), t) != edges.end();
}

bool injections(const Hypergraph3& f, const Hypergraph3& h,
                std::vector<Vertex>& map, std::vector<bool>& used) {
  if (map.size() == f.vertex_count()) {
    std::vector<Triple> host(h.edges().begin(), h.edges().end());
    for (const Triple& e : f.edges()) {
      if (!edge_in(host, {map[e[0]], map[e[1]], map[e[2]]})) return false;
    }
    return true;
  }
  for (Vertex x = 0; x < h.vertex_count(); ++x) {
    if (used[x]) continue;
    used[x] = true;
    map.push_back(x);
    const bool found = injections(f, h, map, used);
    map.pop_back();
    used[x] = false;
    if (found) return true;
  }
  return false;
}

std::size_t best_matching(const std::vector<Triple>& edges, std::size_t from,
                          std::vector<bool>& covered) {
  std::size_t best = 0;
  for (std::size_t i = from; i < edges.size(); ++i) {
    const Triple& e = edges[i];
    if (covered[e[0]] || covered[e[1]] || covered[e[2]]) continue;
    for (Vertex v : e) covered[v] = true;
    best = std::max(best, 1 + best_matching(edges, i + 1, covered));
    for (Vertex v : e) covered[v] = false;
  }
  return best;
}

bool is_star(const std::vector<std::pair<Vertex, Vertex>>& cls) {
  for (Vertex c : {cls[0].first, cls[0].second}) {
    if (std::all_of(cls.begin(), cls.end(),
                    [c](const auto& p) { return p.first == c || p.second == c; })) {
      return true;
    }
  }
  return false;
}

bool assignment_exists(const ColoredMultigraph& m, const std::vector<Vertex>& set,
                       std::size_t k, bool exact_k) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) pairs.emplace_back(set[a], set[b]);
  }
  std::vector<std::vector<std::size_t>> options;
  for (const auto& [u, v] : pairs) {
    std::vector<std::size_t> opts;
    for (std::size_t c = 0; c < m.layer_count(); ++c) {
      if (m.colors(u, v) >> c & 1u) opts.push_back(c);
    }
    if (opts.empty()) return false;
    options.push_back(opts);
  }
  std::vector<std::size_t> pick(pairs.size(), 0);
  while (true) {
    std::map<std::size_t, std::vector<std::pair<Vertex, Vertex>>> classes;
    for (std::size_t i = 0; i < pairs.size(); ++i) classes[options[i][pick[i]]].push_back(pairs[i]);
    bool ok = exact_k ? classes.size() == k : classes.size() <= k;
    for (const auto& [c, cls] : classes) ok = ok && is_star(cls);
    if (ok) return true;
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == pick.size()) return false;
  }
}

bool subsets_have_clique(const ColoredMultigraph& m, std::size_t k, std::size_t t,
                         bool exact_k, std::vector<Vertex>& set, Vertex from) {
  if (set.size() == t) return assignment_exists(m, set, k, exact_k);
  for (Vertex v = from; v < m.vertex_count(); ++v) {
    set.push_back(v);
    const bool found = subsets_have_clique(m, k, t, exact_k, set, v + 1);
    set.pop_back();
    if (found) return true;
  }
  return false;
}

bool colouring_ok(const Hypergraph3& h, const std::vector<std::size_t>& colour) {
  for (const Triple& e : h.edges()) {
    if (colour[e[0]] == colour[e[1]] && colour[e[1]] == colour[e[2]]) return false;
  }
  return true;
}

}  // namespace

bool contains(const Hypergraph3& pattern, const Hypergraph3& host) {
  if (pattern.vertex_count() > host.vertex_count()) return false;
  std::vector<Vertex> map;
  std::vector<bool> used(host.vertex_count(), false);
  return injections(pattern, host, map, used);
}

std::size_t matching_number(const Hypergraph3& h) {
  std::vector<Triple> edges(h.edges().begin(), h.edges().end());
  std::vector<bool> covered(h.vertex_count(), false);
  return best_matching(edges, 0, covered);
}

bool has_star_colored_clique(const ColoredMultigraph& m, std::size_t k,
                             std::size_t t, bool exact_k) {
  std::vector<Vertex> set;
  return subsets_have_clique(m, k, t, exact_k, set, 0);
}

std::size_t extremal_number(std::uint32_t n, const std::vector<Hypergraph3>& family,
                            std::optional<std::size_t> matching_bound) {
  if (n > 6) throw std::invalid_argument("reference extremal number needs n <= 6");
  std::vector<Triple> all;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) all.push_back({a, b, c});
    }
  }
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    std::vector<Triple> edges;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask >> i & 1u) edges.push_back(all[i]);
    }
    const Hypergraph3 h(n, edges);
    if (matching_bound && matching_number(h) > *matching_bound) continue;
    if (std::any_of(family.begin(), family.end(),
                    [&](const Hypergraph3& f) { return contains(f, h); })) {
      continue;
    }
    best = size;
  }
  return best;
}

std::size_t colored_max(std::uint32_t n, std::size_t s, std::size_t r, bool exact_k) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  const std::size_t bits = s * pairs.size();
  if (bits > 20) throw std::invalid_argument("reference coloured maximum is too large");
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    std::vector<Graph2> layers;
    for (std::size_t c = 0; c < s; ++c) {
      std::vector<Pair> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> (c * pairs.size() + i) & 1u) edges.push_back({pairs[i].first, pairs[i].second});
      }
      layers.emplace_back(n, edges);
    }
    if (!has_star_colored_clique(ColoredMultigraph(n, layers), r - 1, r, exact_k)) best = size;
  }
  return best;
}

std::size_t weak_chromatic_number(const Hypergraph3& h) {
  const std::size_t n = h.vertex_count();
  if (n == 0) return 0;
  for (std::size_t k = 1;; ++k) {
    std::vector<std::size_t> colour(n, 0);
    while (true) {
      if (colouring_ok(h, colour)) return k;
      std::size_t i = 0;
      while (i < n && ++colour[i] == k) colour[i++] = 0;
      if (i == n) break;
    }
  }
}

std::optional<std::size_t> p_value(const Hypergraph3& h) {
  std::optional<std::size_t> best;
  const std::size_t n = h.vertex_count();
  for (std::uint64_t red = 0; red < (std::uint64_t{1} << n); ++red) {
    std::vector<std::size_t> colour(n);
    for (std::size_t v = 0; v < n; ++v) colour[v] = red >> v & 1u;
    if (!colouring_ok(h, colour)) continue;
    const auto count = static_cast<std::size_t>(std::popcount(red));
    if (!best || count < *best) best = count;
  }
  return best;
}

std::optional<std::size_t> q_value(const Hypergraph3& h) {
  std::optional<std::size_t> best;
  const std::size_t n = h.vertex_count();
  for (std::uint64_t red = 0; red < (std::uint64_t{1} << n); ++red) {
    const bool ok = std::all_of(h.edges().begin(), h.edges().end(), [&](const Triple& e) {
      return (red >> e[0] & 1u) + (red >> e[1] & 1u) + (red >> e[2] & 1u) == 1;
    });
    if (!ok) continue;
    const auto count = static_cast<std::size_t>(std::popcount(red));
    if (!best || count < *best) best = count;
  }
  return best;
}

}  // namespace turan::reference
