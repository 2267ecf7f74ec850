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

#include "turan/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "turan/errors.hpp"

namespace turan {
namespace {

void check_vertex(const Hypergraph3& h, Vertex v) {
  if (v >= h.vertex_count()) {
    throw InputError("vertex " + std::to_string(v) + " out of range for n=" +
                     std::to_string(h.vertex_count()));
  }
}

std::vector<char> membership(const VertexSet& set, Vertex n) {
  std::vector<char> mask(n, 0);
  for (Vertex v : set) {
    if (v >= n) {
      throw InputError("vertex " + std::to_string(v) +
                       " out of range for n=" + std::to_string(n));
    }
    mask[v] = 1;
  }
  return mask;
}

}  // namespace

Triple make_triple(Vertex a, Vertex b, Vertex c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2]) {
    throw InputError("triple {" + std::to_string(a) + "," + std::to_string(b) +
                     "," + std::to_string(c) + "} repeats a vertex");
  }
  return t;
}

Hypergraph3::Hypergraph3(Vertex n) : n_(n), degrees_(n, 0) {}

Hypergraph3::Hypergraph3(Vertex n, std::vector<Triple> edges)
    : n_(n), degrees_(n, 0) {
  for (Triple& t : edges) {
    t = make_triple(t[0], t[1], t[2]);
    if (t[2] >= n) {
      throw InputError("triple {" + std::to_string(t[0]) + "," +
                       std::to_string(t[1]) + "," + std::to_string(t[2]) +
                       "} out of range for n=" + std::to_string(n));
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InputError("duplicate triple in hypergraph");
  }
  edges_ = std::move(edges);
  for (const Triple& t : edges_) {
    for (Vertex v : t) ++degrees_[v];
  }
}

bool Hypergraph3::has_edge(const Triple& t) const {
  return std::binary_search(edges_.begin(), edges_.end(), t);
}

Graph2 link_graph(const Hypergraph3& h, Vertex v, const VertexSet& within) {
  check_vertex(h, v);
  const auto in = membership(within, h.vertex_count());
  std::vector<Pair> pairs;
  for (const Triple& t : h.edges()) {
    if (t[0] != v && t[1] != v && t[2] != v) continue;
    Vertex rest[2];
    int k = 0;
    for (Vertex x : t) {
      if (x != v) rest[k++] = x;
    }
    if (in[rest[0]] && in[rest[1]]) pairs.push_back({rest[0], rest[1]});
  }
  return Graph2(h.vertex_count(), std::move(pairs));
}

Graph2 link_graph(const Hypergraph3& h, Vertex v) {
  return link_graph(h, v, all_vertices(h.vertex_count()));
}

VertexSet pair_neighborhood(const Hypergraph3& h, Vertex u, Vertex v) {
  check_vertex(h, u);
  check_vertex(h, v);
  if (u == v) throw InputError("pair neighborhood needs two distinct vertices");
  VertexSet out;
  for (const Triple& t : h.edges()) {
    bool has_u = false;
    bool has_v = false;
    for (Vertex x : t) {
      has_u |= x == u;
      has_v |= x == v;
    }
    if (!has_u || !has_v) continue;
    for (Vertex x : t) {
      if (x != u && x != v) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t max_codegree(const Hypergraph3& h) {
  const Vertex n = h.vertex_count();
  if (n < 2) throw InputError("max codegree needs at least two vertices");
  std::vector<std::size_t> codegree(static_cast<std::size_t>(n) * n, 0);
  std::size_t best = 0;
  auto bump = [&](Vertex a, Vertex b) {
    best = std::max(best, ++codegree[static_cast<std::size_t>(a) * n + b]);
  };
  for (const Triple& t : h.edges()) {
    bump(t[0], t[1]);
    bump(t[0], t[2]);
    bump(t[1], t[2]);
  }
  return best;
}

bool is_weakly_independent(const Hypergraph3& h, const VertexSet& set) {
  const auto in = membership(set, h.vertex_count());
  return std::none_of(h.edges().begin(), h.edges().end(), [&](const Triple& t) {
    return in[t[0]] && in[t[1]] && in[t[2]];
  });
}

DegreePartition degree_partition(const Hypergraph3& h, Count s) {
  if (s < 0) throw InputError("degree partition needs s >= 0");
  DegreePartition out;
  const Count n = h.vertex_count();
  out.threshold = checked_add(checked_mul(checked_mul(3, s), n), 1);
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (static_cast<Count>(h.degree(v)) >= out.threshold) {
      out.high.push_back(v);
    } else {
      out.low.push_back(v);
    }
  }
  return out;
}

Hypergraph3 induced(const Hypergraph3& h, const VertexSet& set) {
  const auto in = membership(set, h.vertex_count());
  std::vector<Triple> kept;
  for (const Triple& t : h.edges()) {
    if (in[t[0]] && in[t[1]] && in[t[2]]) kept.push_back(t);
  }
  return Hypergraph3(h.vertex_count(), std::move(kept));
}

Hypergraph3 cross_subgraph(const Hypergraph3& h, const VertexSet& left,
                           const VertexSet& right) {
  const auto in_left = membership(left, h.vertex_count());
  const auto in_right = membership(right, h.vertex_count());
  for (Vertex v : right) {
    if (in_left[v]) {
      throw InputError("cross subgraph needs disjoint sets; vertex " +
                       std::to_string(v) + " is in both");
    }
  }
  std::vector<Triple> kept;
  for (const Triple& t : h.edges()) {
    bool meets_left = false;
    bool meets_right = false;
    for (Vertex x : t) {
      meets_left |= in_left[x] != 0;
      meets_right |= in_right[x] != 0;
    }
    if (meets_left && meets_right) kept.push_back(t);
  }
  return Hypergraph3(h.vertex_count(), std::move(kept));
}

Graph2 shadow(const Hypergraph3& h) {
  std::vector<Pair> pairs;
  pairs.reserve(h.edge_count() * 3);
  for (const Triple& t : h.edges()) {
    pairs.push_back({t[0], t[1]});
    pairs.push_back({t[0], t[2]});
    pairs.push_back({t[1], t[2]});
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return Graph2(h.vertex_count(), std::move(pairs));
}

Compacted compact(const Hypergraph3& h, const VertexSet& set) {
  const VertexSet sorted = make_vertex_set(set, h.vertex_count());
  std::vector<Vertex> to_new(h.vertex_count(), h.vertex_count());
  for (Vertex i = 0; i < sorted.size(); ++i) to_new[sorted[i]] = i;
  std::vector<Triple> kept;
  for (const Triple& t : h.edges()) {
    const Vertex a = to_new[t[0]];
    const Vertex b = to_new[t[1]];
    const Vertex c = to_new[t[2]];
    if (a == h.vertex_count() || b == h.vertex_count() ||
        c == h.vertex_count()) {
      continue;
    }
    kept.push_back({a, b, c});
  }
  return {Hypergraph3(static_cast<Vertex>(sorted.size()), std::move(kept)),
          sorted};
}

Hypergraph3 relabel(const Hypergraph3& h, std::span<const Vertex> perm) {
  const Vertex n = h.vertex_count();
  if (perm.size() != n) throw InputError("relabel needs a full permutation");
  std::vector<char> seen(n, 0);
  for (Vertex v : perm) {
    if (v >= n || seen[v]) throw InputError("relabel map is not a permutation");
    seen[v] = 1;
  }
  std::vector<Triple> edges;
  edges.reserve(h.edge_count());
  for (const Triple& t : h.edges()) {
    edges.push_back(make_triple(perm[t[0]], perm[t[1]], perm[t[2]]));
  }
  return Hypergraph3(n, std::move(edges));
}

}  // namespace turan
