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

#include "turan/colorings.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "turan/errors.hpp"

namespace turan {
namespace {

using Mask = std::uint64_t;

void check_size(Vertex n) {
  if (n > kMaxColoringVertices) {
    throw InputError("colouring routines accept at most 64 vertices, got " +
                     std::to_string(n));
  }
}

Mask bit(Vertex v) { return Mask{1} << v; }

std::vector<Mask> adjacency_masks(const Graph2& g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (const Pair& p : g.edges()) {
    adj[p.u] |= bit(p.v);
    adj[p.v] |= bit(p.u);
  }
  return adj;
}

std::vector<Mask> edge_masks(const Hypergraph3& h) {
  std::vector<Mask> out;
  out.reserve(h.edge_count());
  for (const Triple& t : h.edges()) out.push_back(bit(t[0]) | bit(t[1]) | bit(t[2]));
  return out;
}

VertexSet members(Mask m) {
  VertexSet out;
  while (m != 0) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

RedBlueColoring split(Mask red, Vertex n) {
  const Mask all = n == 64 ? ~Mask{0} : (bit(n) - 1);
  return {members(red), members(all & ~red)};
}

// Largest clique found by greedy extension from every start vertex.
std::size_t greedy_clique(const std::vector<Mask>& adj) {
  std::size_t best = adj.empty() ? 0 : 1;
  for (Vertex start = 0; start < adj.size(); ++start) {
    Mask candidates = adj[start];
    std::size_t size = 1;
    while (candidates != 0) {
      Vertex pick = 0;
      int pick_degree = -1;
      for (Mask c = candidates; c != 0; c &= c - 1) {
        const auto v = static_cast<Vertex>(std::countr_zero(c));
        const int d = std::popcount(adj[v] & candidates);
        if (d > pick_degree) {
          pick_degree = d;
          pick = v;
        }
      }
      candidates &= adj[pick];
      ++size;
    }
    best = std::max(best, size);
  }
  return best;
}

class GraphColoring {
 public:
  GraphColoring(const std::vector<Mask>& adj, std::size_t colors)
      : adj_(adj), colors_(colors), color_(adj.size(), -1) {}

  bool run() { return extend(0, 0); }

 private:
  // DSATUR branching: most saturated uncoloured vertex first.
  bool extend(std::size_t coloured, std::size_t used) {
    if (coloured == adj_.size()) return true;
    int best_sat = -1;
    int best_deg = -1;
    Vertex pick = 0;
    Mask pick_forbidden = 0;
    for (Vertex v = 0; v < adj_.size(); ++v) {
      if (color_[v] >= 0) continue;
      Mask forbidden = 0;
      for (Mask m = adj_[v]; m != 0; m &= m - 1) {
        const int c = color_[std::countr_zero(m)];
        if (c >= 0) forbidden |= bit(static_cast<Vertex>(c));
      }
      const int sat = std::popcount(forbidden);
      const int deg = std::popcount(adj_[v]);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best_sat = sat;
        best_deg = deg;
        pick = v;
        pick_forbidden = forbidden;
      }
    }
    const std::size_t limit = std::min(colors_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (pick_forbidden & bit(static_cast<Vertex>(c))) continue;
      color_[pick] = static_cast<int>(c);
      if (extend(coloured + 1, std::max(used, c + 1))) return true;
    }
    color_[pick] = -1;
    return false;
  }

  const std::vector<Mask>& adj_;
  std::size_t colors_;
  std::vector<int> color_;
};

std::size_t greedy_colour_count(const std::vector<Mask>& adj) {
  std::vector<Vertex> order(adj.size());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return std::popcount(adj[a]) > std::popcount(adj[b]);
  });
  std::vector<int> color(adj.size(), -1);
  std::size_t used = 0;
  for (Vertex v : order) {
    Mask forbidden = 0;
    for (Mask m = adj[v]; m != 0; m &= m - 1) {
      const int c = color[std::countr_zero(m)];
      if (c >= 0) forbidden |= bit(static_cast<Vertex>(c));
    }
    const auto c = static_cast<std::size_t>(std::countr_one(forbidden));
    color[v] = static_cast<int>(c);
    used = std::max(used, c + 1);
  }
  return used;
}

class WeakColoring {
 public:
  WeakColoring(const Hypergraph3& h, std::size_t colors)
      : colors_(colors), color_(h.vertex_count(), 0),
        closing_(h.vertex_count()) {
    // Each edge is checked when its largest vertex gets a colour.
    for (const Triple& t : h.edges()) closing_[t[2]].push_back(t);
  }

  bool run() { return extend(0, 0); }

 private:
  bool extend(Vertex v, std::size_t used) {
    if (v == color_.size()) return true;
    const std::size_t limit = std::min(colors_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      color_[v] = c;
      const bool ok = std::none_of(
          closing_[v].begin(), closing_[v].end(), [&](const Triple& t) {
            return color_[t[0]] == c && color_[t[1]] == c;
          });
      if (ok && extend(v + 1, std::max(used, c + 1))) return true;
    }
    return false;
  }

  std::size_t colors_;
  std::vector<std::size_t> color_;
  std::vector<std::vector<Triple>> closing_;
};

class ProperRedSearch {
 public:
  ProperRedSearch(std::vector<Mask> edges, Vertex n)
      : edges_(std::move(edges)), n_(n) {}

  // Red sets of size exactly k in lexicographic order; prunes any partial
  // set that already swallows an edge.
  std::optional<Mask> find(std::size_t k) { return choose(0, k, 0); }

 private:
  std::optional<Mask> choose(Vertex start, std::size_t left, Mask red) {
    if (left == 0) {
      const bool hits_all = std::all_of(edges_.begin(), edges_.end(),
                                        [&](Mask e) { return (e & red) != 0; });
      if (hits_all) return red;
      return std::nullopt;
    }
    for (Vertex v = start; v + left <= n_; ++v) {
      const Mask next = red | bit(v);
      const bool swallows = std::any_of(
          edges_.begin(), edges_.end(),
          [&](Mask e) { return (e & bit(v)) && (e & next) == e; });
      if (swallows) continue;
      if (auto found = choose(v + 1, left - 1, next)) return found;
    }
    return std::nullopt;
  }

  std::vector<Mask> edges_;
  Vertex n_;
};

// Exactly-one-red search with unit propagation, minimizing |R|.
class StrongRedSearch {
 public:
  StrongRedSearch(std::vector<Mask> edges, Vertex n)
      : edges_(std::move(edges)), n_(n) {
    for (Mask e : edges_) covered_ |= e;
  }

  std::optional<Mask> run() {
    Mask red = 0;
    Mask blue = 0;
    if (propagate(red, blue)) descend(red, blue);
    return best_red_;
  }

 private:
  bool propagate(Mask& red, Mask& blue) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Mask e : edges_) {
        const int reds = std::popcount(e & red);
        const Mask open = e & ~red & ~blue;
        if (reds > 1) return false;
        if (reds == 1) {
          if (open != 0) {
            blue |= open;
            changed = true;
          }
        } else if (open == 0) {
          return false;
        } else if (std::popcount(open) == 1) {
          red |= open;
          changed = true;
        }
      }
    }
    return true;
  }

  void descend(Mask red, Mask blue) {
    const auto reds = static_cast<std::size_t>(std::popcount(red));
    if (best_count_ && reds >= *best_count_) return;
    const Mask open = covered_ & ~red & ~blue;
    if (open == 0) {
      best_count_ = reds;
      best_red_ = red;
      return;
    }
    const Mask v = open & (~open + 1);
    {
      Mask r = red;
      Mask b = blue | v;
      if (propagate(r, b)) descend(r, b);
    }
    {
      Mask r = red | v;
      Mask b = blue;
      if (propagate(r, b)) descend(r, b);
    }
  }

  std::vector<Mask> edges_;
  Vertex n_;
  Mask covered_ = 0;
  std::optional<std::size_t> best_count_;
  std::optional<Mask> best_red_;
};

}  // namespace

std::string ExtendedCount::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("inf");
}

std::strong_ordering operator<=>(const ExtendedCount& a,
                                 const ExtendedCount& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
  }
  return a.value() <=> b.value();
}

std::size_t graph_chromatic_number(const Graph2& g) {
  check_size(g.vertex_count());
  if (g.vertex_count() == 0) return 0;
  if (g.edge_count() == 0) return 1;
  const auto adj = adjacency_masks(g);
  const std::size_t upper = greedy_colour_count(adj);
  for (std::size_t k = greedy_clique(adj); k < upper; ++k) {
    if (GraphColoring(adj, k).run()) return k;
  }
  return upper;
}

std::size_t hypergraph_chromatic_number(const Hypergraph3& h) {
  check_size(h.vertex_count());
  if (h.vertex_count() == 0) return 0;
  if (h.edge_count() == 0) return 1;
  for (std::size_t k = 2;; ++k) {
    if (WeakColoring(h, k).run()) return k;
  }
}

RedBlueResult p_value(const Hypergraph3& h) {
  check_size(h.vertex_count());
  ProperRedSearch search(edge_masks(h), h.vertex_count());
  for (std::size_t k = 0; k <= h.vertex_count(); ++k) {
    if (auto red = search.find(k)) {
      return {ExtendedCount(k), split(*red, h.vertex_count())};
    }
  }
  return {ExtendedCount::infinity(), std::nullopt};
}

RedBlueResult q_value(const Hypergraph3& h) {
  check_size(h.vertex_count());
  StrongRedSearch search(edge_masks(h), h.vertex_count());
  if (auto red = search.run()) {
    return {ExtendedCount(static_cast<std::size_t>(std::popcount(*red))),
            split(*red, h.vertex_count())};
  }
  return {ExtendedCount::infinity(), std::nullopt};
}

LinkChromaticProfile link_chromatic_profile(const Hypergraph3& h) {
  check_size(h.vertex_count());
  std::vector<std::size_t> chi(h.vertex_count());
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    chi[v] = graph_chromatic_number(link_graph(h, v));
  }
  LinkChromaticProfile out;
  out.ordering = all_vertices(h.vertex_count());
  std::stable_sort(out.ordering.begin(), out.ordering.end(),
                   [&](Vertex a, Vertex b) { return chi[a] > chi[b]; });
  for (Vertex v : out.ordering) out.values.push_back(chi[v]);
  return out;
}

}  // namespace turan
