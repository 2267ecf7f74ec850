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

#include "turan/containment.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "turan/errors.hpp"
#include "turan/matching.hpp"

namespace turan {
namespace {

using Word = std::uint64_t;

void check_host_size(const Hypergraph3& host) {
  if (host.vertex_count() > kMaxHostVertices) {
    throw InputError("containment supports hosts with at most " +
                     std::to_string(kMaxHostVertices) + " vertices, got " +
                     std::to_string(host.vertex_count()));
  }
}

// Co-neighbourhood bitsets N(u,v), shadow adjacency and co-degrees of a
// host.
class HostIndex {
 public:
  explicit HostIndex(const Hypergraph3& host)
      : n_(host.vertex_count()),
        words_((host.vertex_count() + 63) / 64),
        pair_bits_(static_cast<std::size_t>(n_) * n_ * words_, 0),
        shadow_bits_(static_cast<std::size_t>(n_) * words_, 0),
        codegree_(static_cast<std::size_t>(n_) * n_, 0),
        degree_(host.degrees().begin(), host.degrees().end()) {
    for (const Triple& t : host.edges()) {
      add(t[0], t[1], t[2]);
      add(t[0], t[2], t[1]);
      add(t[1], t[2], t[0]);
    }
  }

  std::size_t words() const { return words_; }
  const Word* neighborhood(Vertex a, Vertex b) const {
    return &pair_bits_[slot(a, b) * words_];
  }
  const Word* shadow(Vertex a) const {
    return &shadow_bits_[static_cast<std::size_t>(a) * words_];
  }
  std::uint32_t codegree(Vertex a, Vertex b) const {
    return codegree_[slot(a, b)];
  }
  std::size_t degree(Vertex v) const { return degree_[v]; }
  Vertex vertex_count() const { return n_; }

 private:
  std::size_t slot(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(a) * n_ + b;
  }

  void add(Vertex a, Vertex b, Vertex c) {
    pair_bits_[slot(a, b) * words_ + c / 64] |= Word{1} << (c % 64);
    ++codegree_[slot(a, b)];
    shadow_bits_[static_cast<std::size_t>(a) * words_ + b / 64] |= Word{1}
                                                                  << (b % 64);
    shadow_bits_[static_cast<std::size_t>(b) * words_ + a / 64] |= Word{1}
                                                                  << (a % 64);
  }

  Vertex n_;
  std::size_t words_;
  std::vector<Word> pair_bits_;
  std::vector<Word> shadow_bits_;
  std::vector<std::uint32_t> codegree_;
  std::vector<std::size_t> degree_;
};

// One pattern vertex in placement order together with the constraints
// that are checkable once it is placed.
struct Step {
  Vertex vertex = 0;
  std::size_t degree = 0;
  // Earlier positions x, y with {vertex, x, y} a pattern edge.
  std::vector<std::pair<std::size_t, std::size_t>> closing_edges;
  // Earlier positions sharing an edge with vertex, and the co-degree the
  // host pair must reach.
  std::vector<std::pair<std::size_t, std::uint32_t>> codegrees;
};

std::vector<Step> plan(const Hypergraph3& pattern) {
  const Vertex n = pattern.vertex_count();
  std::vector<std::uint32_t> codegree(static_cast<std::size_t>(n) * n, 0);
  for (const Triple& t : pattern.edges()) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i != j) ++codegree[t[i] * n + t[j]];
      }
    }
  }
  std::vector<std::size_t> position(n, SIZE_MAX);
  std::vector<Step> steps;
  const auto placed_count = [&] { return steps.size(); };
  while (true) {
    // Rank: closing edges, then placed co-neighbours, then degree.
    std::tuple<std::size_t, std::size_t, std::size_t> best_key{0, 0, 0};
    Vertex best = n;
    for (Vertex v = 0; v < n; ++v) {
      if (position[v] != SIZE_MAX || pattern.degree(v) == 0) continue;
      std::size_t closing = 0;
      for (const Triple& t : pattern.edges()) {
        if (t[0] != v && t[1] != v && t[2] != v) continue;
        std::size_t others = 0;
        for (Vertex x : t) others += (x != v && position[x] != SIZE_MAX);
        closing += others == 2;
      }
      std::size_t linked = 0;
      for (Vertex x = 0; x < n; ++x) {
        linked += position[x] != SIZE_MAX && codegree[v * n + x] > 0;
      }
      const auto key = std::make_tuple(closing, linked, pattern.degree(v));
      if (best == n || key > best_key) {
        best_key = key;
        best = v;
      }
    }
    if (best == n) break;
    Step step;
    step.vertex = best;
    step.degree = pattern.degree(best);
    for (const Triple& t : pattern.edges()) {
      if (t[0] != best && t[1] != best && t[2] != best) continue;
      std::array<std::size_t, 2> others{};
      int k = 0;
      for (Vertex x : t) {
        if (x != best) others[k++] = position[x];
      }
      if (others[0] != SIZE_MAX && others[1] != SIZE_MAX) {
        step.closing_edges.emplace_back(others[0], others[1]);
      }
    }
    for (Vertex x = 0; x < n; ++x) {
      if (position[x] != SIZE_MAX && codegree[best * n + x] > 0) {
        step.codegrees.emplace_back(position[x], codegree[best * n + x]);
      }
    }
    position[best] = placed_count();
    steps.push_back(std::move(step));
  }
  return steps;
}

class Backtracker {
 public:
  Backtracker(const Hypergraph3& pattern, const HostIndex& host)
      : pattern_(pattern),
        host_(host),
        steps_(plan(pattern)),
        image_(steps_.size(), 0),
        used_(host.words(), 0),
        candidates_(steps_.size(), std::vector<Word>(host.words(), 0)) {}

  std::optional<Embedding> run() {
    if (!extend(0)) return std::nullopt;
    Embedding map(pattern_.vertex_count(), 0);
    for (std::size_t i = 0; i < steps_.size(); ++i) map[steps_[i].vertex] = image_[i];
    // Isolated pattern vertices take the lowest unused host vertices.
    Vertex next = 0;
    for (Vertex v = 0; v < pattern_.vertex_count(); ++v) {
      if (pattern_.degree(v) != 0) continue;
      while (used_[next / 64] & (Word{1} << (next % 64))) ++next;
      map[v] = next;
      used_[next / 64] |= Word{1} << (next % 64);
    }
    return map;
  }

 private:
  bool extend(std::size_t pos) {
    if (pos == steps_.size()) return true;
    const Step& step = steps_[pos];
    std::vector<Word>& cand = candidates_[pos];
    const std::size_t words = host_.words();
    if (!step.closing_edges.empty()) {
      const auto [x0, y0] = step.closing_edges.front();
      std::copy_n(host_.neighborhood(image_[x0], image_[y0]), words, cand.begin());
      for (std::size_t i = 1; i < step.closing_edges.size(); ++i) {
        const auto [x, y] = step.closing_edges[i];
        const Word* nb = host_.neighborhood(image_[x], image_[y]);
        for (std::size_t w = 0; w < words; ++w) cand[w] &= nb[w];
      }
    } else if (!step.codegrees.empty()) {
      std::copy_n(host_.shadow(image_[step.codegrees.front().first]), words,
                  cand.begin());
      for (std::size_t i = 1; i < step.codegrees.size(); ++i) {
        const Word* sh = host_.shadow(image_[step.codegrees[i].first]);
        for (std::size_t w = 0; w < words; ++w) cand[w] &= sh[w];
      }
    } else {
      std::fill(cand.begin(), cand.end(), ~Word{0});
      const Vertex n = host_.vertex_count();
      if (n % 64 != 0) cand[words - 1] = (Word{1} << (n % 64)) - 1;
    }
    for (std::size_t w = 0; w < words; ++w) cand[w] &= ~used_[w];

    for (std::size_t w = 0; w < words; ++w) {
      Word word = cand[w];
      while (word != 0) {
        const auto c = static_cast<Vertex>(w * 64 + std::countr_zero(word));
        word &= word - 1;
        if (host_.degree(c) < step.degree) continue;
        const bool fits = std::all_of(
            step.codegrees.begin(), step.codegrees.end(), [&](const auto& req) {
              return host_.codegree(c, image_[req.first]) >= req.second;
            });
        if (!fits) continue;
        image_[pos] = c;
        used_[w] |= Word{1} << (c % 64);
        if (extend(pos + 1)) return true;
        used_[w] &= ~(Word{1} << (c % 64));
      }
    }
    return false;
  }

  const Hypergraph3& pattern_;
  const HostIndex& host_;
  std::vector<Step> steps_;
  std::vector<Vertex> image_;
  std::vector<Word> used_;
  std::vector<std::vector<Word>> candidates_;
};

Embedding lowest_unused(const Hypergraph3& pattern, Embedding map,
                        const std::vector<char>& used_in) {
  std::vector<char> used = used_in;
  Vertex next = 0;
  for (Vertex v = 0; v < pattern.vertex_count(); ++v) {
    if (pattern.degree(v) != 0) continue;
    while (used[next]) ++next;
    map[v] = next;
    used[next] = 1;
  }
  return map;
}

bool is_matching_pattern(const Hypergraph3& pattern) {
  return std::all_of(pattern.degrees().begin(), pattern.degrees().end(),
                     [](std::size_t d) { return d <= 1; });
}

std::optional<Embedding> embed_matching(const Hypergraph3& pattern,
                                        const Hypergraph3& host) {
  auto witness = find_matching_of_size(host, pattern.edge_count());
  if (!witness) return std::nullopt;
  Embedding map(pattern.vertex_count(), 0);
  std::vector<char> used(host.vertex_count(), 0);
  for (std::size_t i = 0; i < pattern.edge_count(); ++i) {
    for (int j = 0; j < 3; ++j) {
      map[pattern.edges()[i][j]] = (*witness)[i][j];
      used[(*witness)[i][j]] = 1;
    }
  }
  return lowest_unused(pattern, std::move(map), used);
}

}  // namespace

std::optional<Embedding> find_embedding_backtracking(const Hypergraph3& pattern,
                                                     const Hypergraph3& host) {
  if (pattern.vertex_count() == 0) {
    throw InputError("containment needs a pattern with at least one vertex");
  }
  check_host_size(host);
  if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
  const HostIndex index(host);
  return Backtracker(pattern, index).run();
}

std::optional<Embedding> find_embedding_subset_scan(const Hypergraph3& pattern,
                                                    const Hypergraph3& host) {
  if (pattern.vertex_count() != 4) {
    throw InputError("subset scan needs a 4-vertex pattern");
  }
  check_host_size(host);
  const Vertex n = host.vertex_count();
  if (n < 4) return std::nullopt;

  // Local triples of a 4-set are indexed by the position they miss.
  std::array<int, 16> perm_for_mask;
  perm_for_mask.fill(-1);
  std::array<std::array<Vertex, 4>, 24> perms{};
  {
    std::array<Vertex, 4> p{0, 1, 2, 3};
    int idx = 0;
    do {
      perms[idx++] = p;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  for (int idx = 23; idx >= 0; --idx) {
    unsigned required = 0;
    for (const Triple& t : pattern.edges()) {
      const Vertex sum = perms[idx][t[0]] + perms[idx][t[1]] + perms[idx][t[2]];
      required |= 1u << (6 - sum);
    }
    for (unsigned mask = 0; mask < 16; ++mask) {
      if ((mask & required) == required) perm_for_mask[mask] = idx;
    }
  }

  std::vector<Word> present((static_cast<std::size_t>(n) * n * n + 63) / 64, 0);
  const auto key = [n](Vertex a, Vertex b, Vertex c) {
    return (static_cast<std::size_t>(a) * n + b) * n + c;
  };
  for (const Triple& t : host.edges()) {
    const std::size_t k = key(t[0], t[1], t[2]);
    present[k / 64] |= Word{1} << (k % 64);
  }
  const auto has = [&](Vertex a, Vertex b, Vertex c) -> unsigned {
    const std::size_t k = key(a, b, c);
    return static_cast<unsigned>((present[k / 64] >> (k % 64)) & 1);
  };

  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        const unsigned abc = has(a, b, c) << 3;
        for (Vertex d = c + 1; d < n; ++d) {
          const unsigned mask =
              abc | has(b, c, d) | (has(a, c, d) << 1) | (has(a, b, d) << 2);
          const int idx = perm_for_mask[mask];
          if (idx < 0) continue;
          const std::array<Vertex, 4> quad{a, b, c, d};
          Embedding map(4);
          for (Vertex p = 0; p < 4; ++p) map[p] = quad[perms[idx][p]];
          return map;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Embedding> find_embedding(const Hypergraph3& pattern,
                                        const Hypergraph3& host) {
  if (pattern.vertex_count() == 0) {
    throw InputError("containment needs a pattern with at least one vertex");
  }
  if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
  if (pattern.edge_count() == 0) {
    Embedding map(pattern.vertex_count());
    std::iota(map.begin(), map.end(), Vertex{0});
    return map;
  }
  if (is_matching_pattern(pattern)) return embed_matching(pattern, host);
  if (pattern.vertex_count() == 4 && host.vertex_count() <= kMaxHostVertices &&
      binomial(host.vertex_count(), 4) <= kSubsetScanLimit) {
    return find_embedding_subset_scan(pattern, host);
  }
  return find_embedding_backtracking(pattern, host);
}

bool contains(const Hypergraph3& pattern, const Hypergraph3& host) {
  return find_embedding(pattern, host).has_value();
}

bool is_valid_embedding(const Hypergraph3& pattern, const Hypergraph3& host,
                        const Embedding& map) {
  if (map.size() != pattern.vertex_count()) return false;
  std::vector<char> seen(host.vertex_count(), 0);
  for (Vertex v : map) {
    if (v >= host.vertex_count() || seen[v]) return false;
    seen[v] = 1;
  }
  return std::all_of(pattern.edges().begin(), pattern.edges().end(),
                     [&](const Triple& t) {
                       return host.has_edge(
                           make_triple(map[t[0]], map[t[1]], map[t[2]]));
                     });
}

bool FamilyVerdicts::free() const {
  return std::none_of(contained.begin(), contained.end(),
                      [](bool c) { return c; });
}

FamilyVerdicts family_free(const std::vector<Hypergraph3>& family,
                           const Hypergraph3& host) {
  FamilyVerdicts out;
  out.contained.reserve(family.size());
  for (const Hypergraph3& pattern : family) {
    out.contained.push_back(contains(pattern, host));
  }
  return out;
}

}  // namespace turan
