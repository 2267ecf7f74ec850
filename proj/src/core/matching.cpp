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

#include "turan/matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace turan {
namespace {

using Word = std::uint64_t;
using EdgeBits = std::vector<Word>;

// Per-vertex incidence bitsets over edge indices.
class MatchingSearch {
 public:
  explicit MatchingSearch(const Hypergraph3& h)
      : h_(h),
        words_((h.edge_count() + 63) / 64),
        incidence_(h.vertex_count(), EdgeBits(words_, 0)),
        used_(h.vertex_count(), 0) {
    const auto edges = h.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (Vertex v : edges[i]) incidence_[v][i / 64] |= Word{1} << (i % 64);
    }
  }

  std::optional<std::vector<Triple>> run(std::size_t k) {
    chosen_.clear();
    if (!search(all_edges(), k)) return std::nullopt;
    std::vector<Triple> out;
    out.reserve(chosen_.size());
    for (std::size_t i : chosen_) out.push_back(h_.edges()[i]);
    return out;
  }

  // Greedy maximal matching over all edges, in index order.
  std::size_t greedy_size() {
    std::vector<std::size_t> picked;
    greedy(all_edges(), picked, h_.edge_count());
    return picked.size();
  }

 private:
  EdgeBits all_edges() const {
    EdgeBits alive(words_, 0);
    for (std::size_t i = 0; i < h_.edge_count(); ++i) {
      alive[i / 64] |= Word{1} << (i % 64);
    }
    return alive;
  }

  static std::size_t popcount(const EdgeBits& bits) {
    std::size_t c = 0;
    for (Word w : bits) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  static bool empty(const EdgeBits& bits) {
    return std::all_of(bits.begin(), bits.end(), [](Word w) { return w == 0; });
  }

  template <typename Fn>
  static void for_each_bit(const EdgeBits& bits, Fn&& fn) {
    for (std::size_t w = 0; w < bits.size(); ++w) {
      Word word = bits[w];
      while (word != 0) {
        const int bit = std::countr_zero(word);
        word &= word - 1;
        if (!fn(w * 64 + static_cast<std::size_t>(bit))) return;
      }
    }
  }

  void greedy(const EdgeBits& alive, std::vector<std::size_t>& picked,
              std::size_t limit) {
    for_each_bit(alive, [&](std::size_t e) {
      const Triple& t = h_.edges()[e];
      if (!used_[t[0]] && !used_[t[1]] && !used_[t[2]]) {
        for (Vertex v : t) used_[v] = 1;
        picked.push_back(e);
      }
      return picked.size() < limit;
    });
    for (std::size_t e : picked) {
      for (Vertex v : h_.edges()[e]) used_[v] = 0;
    }
  }

  // Size of a greedy max-degree vertex cover of \p alive, stopping once it
  // reaches \p cap. Any cover bounds the matching number from above.
  std::size_t greedy_cover(EdgeBits alive, std::size_t cap) const {
    std::size_t cover = 0;
    while (!empty(alive) && cover < cap) {
      std::size_t best_degree = 0;
      Vertex best = 0;
      for (Vertex v = 0; v < h_.vertex_count(); ++v) {
        std::size_t d = 0;
        for (std::size_t w = 0; w < words_; ++w) {
          d += static_cast<std::size_t>(std::popcount(alive[w] & incidence_[v][w]));
        }
        if (d > best_degree) {
          best_degree = d;
          best = v;
        }
      }
      for (std::size_t w = 0; w < words_; ++w) alive[w] &= ~incidence_[best][w];
      ++cover;
    }
    return empty(alive) ? cover : cap;
  }

  bool search(const EdgeBits& alive, std::size_t need) {
    if (need == 0) return true;
    if (popcount(alive) < need) return false;

    std::vector<std::size_t> picked;
    greedy(alive, picked, need);
    if (picked.size() >= need) {
      chosen_.insert(chosen_.end(), picked.begin(), picked.end());
      return true;
    }
    if (greedy_cover(alive, need) < need) return false;

    // Some size-need matching meets the lowest alive edge e (swap e in
    // otherwise), so branch on every alive edge through a vertex of e.
    std::size_t lowest = 0;
    for_each_bit(alive, [&](std::size_t e) {
      lowest = e;
      return false;
    });
    EdgeBits tried(words_, 0);
    EdgeBits next(words_, 0);
    for (Vertex x : h_.edges()[lowest]) {
      EdgeBits through(words_, 0);
      for (std::size_t w = 0; w < words_; ++w) {
        through[w] = alive[w] & incidence_[x][w] & ~tried[w];
        tried[w] |= through[w];
      }
      bool found = false;
      for_each_bit(through, [&](std::size_t f) {
        const Triple& t = h_.edges()[f];
        for (std::size_t w = 0; w < words_; ++w) {
          next[w] = alive[w] & ~incidence_[t[0]][w] & ~incidence_[t[1]][w] &
                    ~incidence_[t[2]][w];
        }
        chosen_.push_back(f);
        if (search(next, need - 1)) {
          found = true;
          return false;
        }
        chosen_.pop_back();
        return true;
      });
      if (found) return true;
    }
    return false;
  }

  const Hypergraph3& h_;
  std::size_t words_;
  std::vector<EdgeBits> incidence_;
  std::vector<char> used_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::optional<std::vector<Triple>> find_matching_of_size(const Hypergraph3& h,
                                                         std::size_t k) {
  if (k == 0) return std::vector<Triple>{};
  if (3 * k > h.vertex_count() || k > h.edge_count()) return std::nullopt;
  return MatchingSearch(h).run(k);
}

bool has_matching_of_size(const Hypergraph3& h, std::size_t k) {
  return find_matching_of_size(h, k).has_value();
}

std::size_t matching_number(const Hypergraph3& h) {
  if (h.edge_count() == 0) return 0;
  MatchingSearch search(h);
  std::size_t nu = search.greedy_size();
  while (3 * (nu + 1) <= h.vertex_count() && search.run(nu + 1)) ++nu;
  return nu;
}

}  // namespace turan
