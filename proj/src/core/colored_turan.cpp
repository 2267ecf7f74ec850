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

#include "turan/colored_turan.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "turan/constructions.hpp"
#include "turan/errors.hpp"

namespace turan {
namespace {

using Word = std::uint64_t;

// Decides whether the pairs of one fixed t-set can be coloured from their
// available layers under the class-count and class-shape rules. Local
// vertices are 0..t-1; pairs are listed lexicographically.
class CliqueColoring {
 public:
  CliqueColoring(std::size_t t, std::size_t k, bool exact_k, ClassShape shape)
      : t_(t), k_(k), exact_k_(exact_k), shape_(shape) {
    for (std::size_t a = 0; a < t; ++a) {
      for (std::size_t b = a + 1; b < t; ++b) pairs_.emplace_back(a, b);
    }
    chosen_.resize(pairs_.size());
  }

  std::span<const std::pair<std::size_t, std::size_t>> pairs() const { return pairs_; }

  // \p masks[i] holds the layers available on pairs()[i].
  bool solve(std::span<const std::uint32_t> masks) {
    masks_ = masks;
    used_ = 0;
    common_.fill(0);
    class_edges_.fill({});
    return descend(0);
  }

  // Layer chosen for each pair by the last successful solve().
  std::span<const std::size_t> chosen() const { return chosen_; }

 private:
  bool descend(std::size_t p) {
    const auto used_count = static_cast<std::size_t>(std::popcount(used_));
    if (p == pairs_.size()) return !exact_k_ || used_count == k_;
    if (exact_k_ && used_count + (pairs_.size() - p) < k_) return false;
    const auto [a, b] = pairs_[p];
    const std::uint32_t ends = (1u << a) | (1u << b);
    for (std::uint32_t avail = masks_[p]; avail != 0; avail &= avail - 1) {
      const auto c = static_cast<std::size_t>(std::countr_zero(avail));
      const std::uint32_t cbit = 1u << c;
      const bool fresh = (used_ & cbit) == 0;
      if (fresh && used_count == k_) continue;
      const std::uint32_t saved_common = common_[c];
      if (shape_ == ClassShape::star) {
        const std::uint32_t next = fresh ? ends : (common_[c] & ends);
        if (next == 0) continue;
        common_[c] = next;
      } else {
        class_edges_[c][a] |= 1u << b;
        class_edges_[c][b] |= 1u << a;
        if (!bipartite(class_edges_[c])) {
          class_edges_[c][a] &= ~(1u << b);
          class_edges_[c][b] &= ~(1u << a);
          continue;
        }
      }
      used_ |= cbit;
      chosen_[p] = c;
      if (descend(p + 1)) return true;
      if (fresh) used_ &= ~cbit;
      common_[c] = saved_common;
      if (shape_ == ClassShape::bipartite) {
        class_edges_[c][a] &= ~(1u << b);
        class_edges_[c][b] &= ~(1u << a);
      }
    }
    return false;
  }

  bool bipartite(const std::array<std::uint32_t, 32>& adj) const {
    std::array<int, 32> side;
    side.fill(-1);
    for (std::size_t root = 0; root < t_; ++root) {
      if (side[root] >= 0 || adj[root] == 0) continue;
      side[root] = 0;
      std::uint32_t frontier = 1u << root;
      while (frontier != 0) {
        const auto v = static_cast<std::size_t>(std::countr_zero(frontier));
        frontier &= frontier - 1;
        for (std::uint32_t nb = adj[v]; nb != 0; nb &= nb - 1) {
          const auto w = static_cast<std::size_t>(std::countr_zero(nb));
          if (side[w] < 0) {
            side[w] = 1 - side[v];
            frontier |= 1u << w;
          } else if (side[w] == side[v]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::size_t t_;
  std::size_t k_;
  bool exact_k_;
  ClassShape shape_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::span<const std::uint32_t> masks_;
  std::vector<std::size_t> chosen_;
  std::uint32_t used_ = 0;
  std::array<std::uint32_t, 32> common_{};
  std::array<std::array<std::uint32_t, 32>, 32> class_edges_{};
};

void check_clique_query(std::size_t k, std::size_t t) {
  if (t < 2 || t > 32) throw InputError("coloured clique size must be in [2, 32]");
  if (k < 1) throw InputError("coloured clique needs k >= 1");
}

class CliqueFinder {
 public:
  CliqueFinder(const ColoredMultigraph& m, std::size_t k, std::size_t t,
               bool exact_k, ClassShape shape)
      : m_(m),
        t_(t),
        words_((m.vertex_count() + 63) / 64),
        adj_(static_cast<std::size_t>(m.vertex_count()) * words_, 0),
        coloring_(t, k, exact_k, shape),
        masks_(coloring_.pairs().size()) {
    const Vertex n = m.vertex_count();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u != v && m.colors(u, v) != 0) {
          adj_[u * words_ + v / 64] |= Word{1} << (v % 64);
        }
      }
    }
  }

  std::optional<ColoredCliqueWitness> run() {
    if (t_ > m_.vertex_count()) return std::nullopt;
    std::vector<Word> all(words_, ~Word{0});
    const Vertex n = m_.vertex_count();
    if (n % 64 != 0) all[words_ - 1] = (Word{1} << (n % 64)) - 1;
    if (!grow(all)) return std::nullopt;
    ColoredCliqueWitness w;
    w.vertices = clique_;
    const auto chosen = coloring_.chosen();
    for (std::size_t i = 0; i < coloring_.pairs().size(); ++i) {
      const auto [a, b] = coloring_.pairs()[i];
      w.assignment.push_back({Pair{clique_[a], clique_[b]}, chosen[i]});
    }
    return w;
  }

 private:
  // Extends the clique with candidates above its last vertex, in
  // ascending order.
  bool grow(const std::vector<Word>& candidates) {
    if (clique_.size() == t_) {
      const auto pairs = coloring_.pairs();
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        masks_[i] = m_.colors(clique_[pairs[i].first], clique_[pairs[i].second]);
      }
      return coloring_.solve(masks_);
    }
    std::vector<Word> next(words_);
    for (std::size_t w = 0; w < words_; ++w) {
      Word word = candidates[w];
      while (word != 0) {
        const auto v = static_cast<Vertex>(w * 64 + std::countr_zero(word));
        word &= word - 1;
        std::size_t remaining = 0;
        for (std::size_t x = 0; x < words_; ++x) {
          next[x] = candidates[x] & adj_[v * words_ + x];
          if (x < w) next[x] = 0;
          if (x == w) next[x] &= word;
          remaining += static_cast<std::size_t>(std::popcount(next[x]));
        }
        if (clique_.size() + 1 + remaining < t_) continue;
        clique_.push_back(v);
        if (grow(next)) return true;
        clique_.pop_back();
      }
    }
    return false;
  }

  const ColoredMultigraph& m_;
  std::size_t t_;
  std::size_t words_;
  std::vector<Word> adj_;
  CliqueColoring coloring_;
  std::vector<std::uint32_t> masks_;
  std::vector<Vertex> clique_;
};

class ColoredMaxSearch {
 public:
  ColoredMaxSearch(Vertex n, std::size_t s, std::size_t r, bool exact_k,
                   std::uint64_t budget)
      : n_(n),
        s_(s),
        r_(r),
        budget_(budget),
        coloring_(r, r - 1, exact_k, ClassShape::star),
        local_masks_(coloring_.pairs().size()),
        index_(static_cast<std::size_t>(n) * n, 0) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        index_[u * n + v] = index_[v * n + u] = pairs_.size();
        pairs_.push_back({u, v});
      }
    }
    masks_.assign(pairs_.size(), 0);
    const std::uint32_t full = s == 32 ? ~0u : ((1u << s) - 1);
    for (std::uint32_t m = 0; m <= full; ++m) {
      options_.push_back(m);
      if (m == full) break;
    }
    std::stable_sort(options_.begin(), options_.end(), [](auto a, auto b) {
      return std::popcount(a) > std::popcount(b);
    });
    for (std::size_t j = s + 1; j-- > 0;) {
      root_options_.push_back(j == 32 ? ~0u : ((1u << j) - 1));
    }
  }

  ColoredMaxResult run() {
    // Seed with s copies of T(n, r-1), which has no K_r at all.
    const Graph2 turan = turan_graph(n_, static_cast<Vertex>(r_ - 1));
    best_ = static_cast<Count>(s_) * static_cast<Count>(turan.edge_count());
    best_masks_.assign(pairs_.size(), 0);
    for (const Pair& p : turan.edges()) {
      best_masks_[index_[p.u * n_ + p.v]] = s_ == 32 ? ~0u : ((1u << s_) - 1);
    }
    if (!pairs_.empty()) descend(0, 0);
    ColoredMaxResult out;
    out.value = best_;
    out.nodes = nodes_;
    for (std::size_t c = 0; c < s_; ++c) {
      std::vector<Pair> edges;
      for (std::size_t p = 0; p < pairs_.size(); ++p) {
        if (best_masks_[p] & (1u << c)) edges.push_back(pairs_[p]);
      }
      out.witness.emplace_back(n_, std::move(edges));
    }
    return out;
  }

 private:
  void descend(std::size_t p, Count current) {
    if (++nodes_ > budget_) {
      throw ResourceExhausted("coloured maximum search exceeded " +
                              std::to_string(budget_) + " nodes");
    }
    if (p == pairs_.size()) {
      if (current > best_) {
        best_ = current;
        best_masks_ = masks_;
      }
      return;
    }
    const auto remaining = static_cast<Count>(pairs_.size() - p - 1);
    const auto& options = p == 0 ? root_options_ : options_;
    for (std::uint32_t mask : options) {
      const Count gain = std::popcount(mask);
      if (current + gain + static_cast<Count>(s_) * remaining <= best_) break;
      masks_[p] = mask;
      if (mask == 0 || admissible(p)) descend(p + 1, current + gain);
    }
    masks_[p] = 0;
  }

  // Checks every r-set whose lexicographically last pair is pairs_[p].
  bool admissible(std::size_t p) {
    const auto [u, v] = pairs_[p];
    if (r_ < 2 || u + 2 < r_) return true;
    std::vector<Vertex> chosen;
    return subsets_ok(0, u, r_ - 2, chosen, u, v);
  }

  bool subsets_ok(Vertex from, Vertex below, std::size_t left,
                  std::vector<Vertex>& chosen, Vertex u, Vertex v) {
    if (left == 0) {
      std::vector<Vertex> set = chosen;
      set.push_back(u);
      set.push_back(v);
      const auto local = coloring_.pairs();
      for (std::size_t i = 0; i < local.size(); ++i) {
        const Vertex a = set[local[i].first];
        const Vertex b = set[local[i].second];
        local_masks_[i] = masks_[index_[a * n_ + b]];
        if (local_masks_[i] == 0) return true;
      }
      return !coloring_.solve(local_masks_);
    }
    for (Vertex x = from; x + left <= below; ++x) {
      chosen.push_back(x);
      const bool ok = subsets_ok(x + 1, below, left - 1, chosen, u, v);
      chosen.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  Vertex n_;
  std::size_t s_;
  std::size_t r_;
  std::uint64_t budget_;
  CliqueColoring coloring_;
  std::vector<std::uint32_t> local_masks_;
  std::vector<Pair> pairs_;
  std::vector<std::size_t> index_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::uint32_t> options_;
  std::vector<std::uint32_t> root_options_;
  std::vector<std::uint32_t> best_masks_;
  Count best_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ColoredMultigraph::ColoredMultigraph(Vertex n, std::vector<Graph2> layers)
    : n_(n), layers_(std::move(layers)),
      colors_(static_cast<std::size_t>(n) * n, 0) {
  if (layers_.size() > 32) throw InputError("at most 32 colour layers are supported");
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    if (layers_[i].vertex_count() != n) {
      throw InputError("layer " + std::to_string(i + 1) + " has " +
                       std::to_string(layers_[i].vertex_count()) +
                       " vertices, expected " + std::to_string(n));
    }
    for (const Pair& p : layers_[i].edges()) {
      colors_[p.u * n + p.v] |= 1u << i;
      colors_[p.v * n + p.u] |= 1u << i;
    }
  }
}

std::uint32_t ColoredMultigraph::colors(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) throw InputError("vertex out of range");
  return colors_[static_cast<std::size_t>(u) * n_ + v];
}

std::size_t ColoredMultigraph::multiplicity(Vertex u, Vertex v) const {
  return static_cast<std::size_t>(std::popcount(colors(u, v)));
}

std::size_t ColoredMultigraph::weighted_degree(Vertex v) const {
  std::size_t d = 0;
  for (Vertex x = 0; x < n_; ++x) d += multiplicity(v, x);
  return d;
}

std::size_t ColoredMultigraph::cut(const VertexSet& left,
                                   const VertexSet& right) const {
  std::size_t total = 0;
  for (Vertex x : left) {
    for (Vertex y : right) {
      if (x != y) total += multiplicity(x, y);
    }
  }
  return total;
}

std::size_t ColoredMultigraph::min_degree() const {
  if (n_ == 0) return 0;
  std::size_t best = weighted_degree(0);
  for (Vertex v = 1; v < n_; ++v) best = std::min(best, weighted_degree(v));
  return best;
}

std::size_t ColoredMultigraph::total_edges() const {
  std::size_t total = 0;
  for (const Graph2& g : layers_) total += g.edge_count();
  return total;
}

std::optional<ColoredCliqueWitness> find_colored_clique(
    const ColoredMultigraph& m, std::size_t k, std::size_t t, bool exact_k,
    ClassShape shape) {
  check_clique_query(k, t);
  return CliqueFinder(m, k, t, exact_k, shape).run();
}

std::optional<ColoredCliqueWitness> find_star_colored_clique(
    const ColoredMultigraph& m, std::size_t k, std::size_t t, bool exact_k) {
  return find_colored_clique(m, k, t, exact_k, ClassShape::star);
}

bool is_valid_colored_clique(const ColoredMultigraph& m, std::size_t k,
                             std::size_t t, bool exact_k, ClassShape shape,
                             const ColoredCliqueWitness& w) {
  if (w.vertices.size() != t) return false;
  std::vector<Vertex> sorted = w.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (w.assignment.size() != t * (t - 1) / 2) return false;
  std::vector<std::vector<Pair>> classes(m.layer_count());
  std::vector<Pair> seen;
  for (const auto& [pair, color] : w.assignment) {
    if (color >= m.layer_count()) return false;
    if (!std::binary_search(sorted.begin(), sorted.end(), pair.u) ||
        !std::binary_search(sorted.begin(), sorted.end(), pair.v) ||
        pair.u == pair.v) {
      return false;
    }
    if (!(m.colors(pair.u, pair.v) & (1u << color))) return false;
    seen.push_back(make_pair(pair.u, pair.v));
    classes[color].push_back(seen.back());
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  std::size_t used = 0;
  for (const auto& cls : classes) {
    if (cls.empty()) continue;
    ++used;
    if (shape == ClassShape::star) {
      const bool star_at_u = std::all_of(cls.begin(), cls.end(), [&](const Pair& p) {
        return p.u == cls[0].u || p.v == cls[0].u;
      });
      const bool star_at_v = std::all_of(cls.begin(), cls.end(), [&](const Pair& p) {
        return p.u == cls[0].v || p.v == cls[0].v;
      });
      if (!star_at_u && !star_at_v) return false;
    } else {
      std::vector<int> side(m.vertex_count(), -1);
      for (const Pair& start : cls) {
        if (side[start.u] >= 0) continue;
        side[start.u] = 0;
        std::vector<Vertex> queue{start.u};
        while (!queue.empty()) {
          const Vertex x = queue.back();
          queue.pop_back();
          for (const Pair& p : cls) {
            if (p.u != x && p.v != x) continue;
            const Vertex y = p.u == x ? p.v : p.u;
            if (side[y] < 0) {
              side[y] = 1 - side[x];
              queue.push_back(y);
            } else if (side[y] == side[x]) {
              return false;
            }
          }
        }
      }
    }
  }
  return exact_k ? used == k : used <= k;
}

bool is_star_colored_free(std::span<const Graph2> layers, std::size_t r,
                          bool exact_k) {
  if (r < 3) throw InputError("star coloured freeness needs r >= 3");
  if (layers.empty()) return true;
  const ColoredMultigraph m(layers.front().vertex_count(),
                            {layers.begin(), layers.end()});
  return !find_star_colored_clique(m, r - 1, r, exact_k).has_value();
}

ColoredMaxResult max_colored_sum(Vertex n, std::size_t s, std::size_t r,
                                 bool exact_k, std::uint64_t budget) {
  if (r < 3) throw InputError("coloured maximum needs r >= 3");
  if (s < 1 || s > 16) throw InputError("coloured maximum needs 1 <= s <= 16");
  if (n > 64) throw InputError("coloured maximum needs n <= 64");
  if (r > 32) throw InputError("coloured maximum needs r <= 32");
  return ColoredMaxSearch(n, s, r, exact_k, budget).run();
}

EvaluatedBound star_colored_upper_bound(Count n, Count s, Count r) {
  EvaluatedBound out;
  out.in_range = s >= 1 && r >= 3 && n > checked_mul(r, checked_mul(r, r));
  if (s <= r - 2) {
    out.value = checked_mul(s, binomial(n, 2));
  } else {
    out.value = checked_add(checked_mul(s, turan_count(n, r - 1)), checked_mul(s, n));
  }
  return out;
}

EvaluatedBound two_star_triangle_bound(Count n, Count s) {
  return {checked_mul(s, checked_mul(n, n) / 4), s >= 2};
}

EvaluatedBound star_colored_conjectured_bound(Count n, Count s, Count r) {
  return {checked_mul(s, turan_count(n, r - 1)), s >= r - 1 && r >= 3};
}

std::optional<Vertex> find_cut_extension(const ColoredMultigraph& m,
                                         const VertexSet& grown, std::size_t r) {
  if (r < 2) throw InputError("cut extension needs r >= 2");
  if (grown.size() > r - 1) throw InputError("cut extension needs |T| <= r-1");
  const VertexSet members = make_vertex_set(grown, m.vertex_count());
  const std::size_t threshold = members.size() * (r - 2) + 1;
  for (Vertex u = 0; u < m.vertex_count(); ++u) {
    if (std::binary_search(members.begin(), members.end(), u)) continue;
    if (m.cut({u}, members) >= threshold) return u;
  }
  return std::nullopt;
}

}  // namespace turan
