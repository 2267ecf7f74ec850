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

#include "turan/extremal_search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <string>

#include "turan/errors.hpp"

namespace turan {
namespace {

using Mask = std::uint64_t;

// Triples of [0, n) in colex order, i.e. sorted by (c, b, a).
struct TripleTable {
  explicit TripleTable(Vertex n) : n(n), index(n * n * n, -1) {
    for (Vertex c = 2; c < n; ++c) {
      for (Vertex b = 1; b < c; ++b) {
        for (Vertex a = 0; a < b; ++a) {
          const int id = static_cast<int>(triples.size());
          triples.push_back({a, b, c});
          const std::array<Vertex, 3> v{a, b, c};
          std::array<int, 3> perm{0, 1, 2};
          do {
            index[(v[perm[0]] * n + v[perm[1]]) * n + v[perm[2]]] = id;
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
      }
    }
    for (const Triple& t : triples) {
      Mask touching = 0;
      for (std::size_t j = 0; j < triples.size(); ++j) {
        const Triple& u = triples[j];
        for (Vertex x : t) {
          if (u[0] == x || u[1] == x || u[2] == x) touching |= Mask{1} << j;
        }
      }
      disjoint.push_back(~touching & full());
    }
  }

  int at(Vertex a, Vertex b, Vertex c) const { return index[(a * n + b) * n + c]; }
  Mask full() const {
    return triples.size() == 64 ? ~Mask{0} : (Mask{1} << triples.size()) - 1;
  }

  Vertex n;
  std::vector<Triple> triples;
  std::vector<int> index;
  std::vector<Mask> disjoint;  // triples sharing no vertex with triple j
};

Mask to_mask(const TripleTable& table, const Hypergraph3& h) {
  Mask m = 0;
  for (const Triple& t : h.edges()) m |= Mask{1} << table.at(t[0], t[1], t[2]);
  return m;
}

Hypergraph3 from_mask(const TripleTable& table, Mask m) {
  std::vector<Triple> edges;
  for (; m != 0; m &= m - 1) edges.push_back(table.triples[std::countr_zero(m)]);
  return Hypergraph3(table.n, std::move(edges));
}

bool has_matching(const TripleTable& table, Mask edges, std::size_t need) {
  if (need == 0) return true;
  if (static_cast<std::size_t>(std::popcount(edges)) < need) return false;
  const int first = std::countr_zero(edges);
  if (has_matching(table, edges & table.disjoint[first], need - 1)) return true;
  return has_matching(table, edges & ~(Mask{1} << first), need);
}

// One forbidden pattern prepared for embeddings anchored on a new triple.
class AnchoredPattern {
 public:
  AnchoredPattern(const Hypergraph3& pattern, const TripleTable& table)
      : pattern_(pattern), table_(table) {
    for (const Triple& anchor : pattern.edges()) {
      Plan plan;
      plan.order.assign(anchor.begin(), anchor.end());
      std::vector<bool> placed(pattern.vertex_count(), false);
      for (Vertex v : anchor) placed[v] = true;
      while (plan.order.size() < pattern.vertex_count()) {
        // Next: the unplaced vertex closing the most edges, lowest label.
        Vertex pick = 0;
        int best = -1;
        for (Vertex v = 0; v < pattern.vertex_count(); ++v) {
          if (placed[v]) continue;
          int score = 0;
          for (const Triple& e : pattern.edges()) {
            int others = 0;
            bool has_v = false;
            for (Vertex x : e) {
              if (x == v) has_v = true;
              else if (placed[x]) ++others;
            }
            if (has_v) score += others == 2 ? 4 : others;
          }
          if (score > best) {
            best = score;
            pick = v;
          }
        }
        placed[pick] = true;
        plan.order.push_back(pick);
      }
      std::vector<std::size_t> position(pattern.vertex_count());
      for (std::size_t i = 0; i < plan.order.size(); ++i) position[plan.order[i]] = i;
      plan.closing.resize(plan.order.size());
      for (const Triple& e : pattern.edges()) {
        const std::size_t last =
            std::max({position[e[0]], position[e[1]], position[e[2]]});
        plan.closing[std::max<std::size_t>(last, 2)].push_back(e);
      }
      plans_.push_back(std::move(plan));
    }
  }

  // True iff some copy of the pattern inside \p edges uses triple \p added.
  bool hits(Mask edges, int added) {
    if (pattern_.vertex_count() > table_.n) return false;
    const Triple& t = table_.triples[added];
    edges_ = edges;
    for (const Plan& plan : plans_) {
      plan_ = &plan;
      std::array<int, 3> perm{0, 1, 2};
      do {
        map_.assign(pattern_.vertex_count(), kUnset);
        used_ = 0;
        for (int i = 0; i < 3; ++i) {
          map_[plan.order[i]] = t[perm[i]];
          used_ |= 1u << t[perm[i]];
        }
        if (closed(2) && extend(3)) return true;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return false;
  }

 private:
  static constexpr Vertex kUnset = ~Vertex{0};

  struct Plan {
    std::vector<Vertex> order;
    std::vector<std::vector<Triple>> closing;  // edges completed at each step
  };

  bool closed(std::size_t step) const {
    for (const Triple& e : plan_->closing[step]) {
      const int id = table_.at(map_[e[0]], map_[e[1]], map_[e[2]]);
      if (!(edges_ & (Mask{1} << id))) return false;
    }
    return true;
  }

  bool extend(std::size_t step) {
    if (step == plan_->order.size()) return true;
    const Vertex v = plan_->order[step];
    for (Vertex x = 0; x < table_.n; ++x) {
      if (used_ & (1u << x)) continue;
      map_[v] = x;
      used_ |= 1u << x;
      if (closed(step) && extend(step + 1)) return true;
      used_ &= ~(1u << x);
    }
    map_[v] = kUnset;
    return false;
  }

  const Hypergraph3& pattern_;
  const TripleTable& table_;
  std::vector<Plan> plans_;
  const Plan* plan_ = nullptr;
  std::vector<Vertex> map_;
  std::uint32_t used_ = 0;
  Mask edges_ = 0;
};

class BudgetHit {};

class ExtremalSearch {
 public:
  explicit ExtremalSearch(const SearchInstance& inst)
      : inst_(inst), table_(inst.n) {
    for (const Hypergraph3& f : inst.family) patterns_.emplace_back(f, table_);
  }

  // Explores every branch that could reach at least \p floor edges; with
  // \p collect set, records each complete set of exactly that size.
  void run(Count floor, bool collect) {
    collect_ = collect;
    best_ = floor - 1;
    best_mask_ = 0;
    try {
      consider(0);
      if (!table_.triples.empty() && admissible(0, 0)) descend(1, Mask{1});
    } catch (const BudgetHit&) {
      exact_ = false;
    }
  }

  Count best() const { return std::max<Count>(best_, 0); }
  Mask best_mask() const { return best_mask_; }
  std::uint64_t nodes() const { return nodes_; }
  bool exact() const { return exact_; }
  const std::vector<Mask>& found() const { return found_; }
  const TripleTable& table() const { return table_; }

 private:
  void consider(Mask m) {
    const Count size = std::popcount(m);
    if (collect_) {
      if (size == best_ + 1) found_.push_back(m);
    } else if (size > best_) {
      best_ = size;
      best_mask_ = m;
    }
  }

  bool admissible(Mask current, int added) {
    const Mask next = current | (Mask{1} << added);
    if (inst_.matching_bound &&
        has_matching(table_, current & table_.disjoint[added], *inst_.matching_bound)) {
      return false;
    }
    for (AnchoredPattern& p : patterns_) {
      if (p.hits(next, added)) return false;
    }
    return true;
  }

  void descend(std::size_t i, Mask current) {
    if (++nodes_ > inst_.budget) throw BudgetHit{};
    const Count size = std::popcount(current);
    const auto remaining = static_cast<Count>(table_.triples.size() - i);
    // Solving needs a strict improvement; collecting needs the target size
    // best_ + 1. Both come to the same test.
    if (size + remaining <= best_) return;
    if (i == table_.triples.size()) {
      consider(current);
      return;
    }
    const int id = static_cast<int>(i);
    if (admissible(current, id)) descend(i + 1, current | (Mask{1} << id));
    descend(i + 1, current);
  }

  const SearchInstance& inst_;
  TripleTable table_;
  std::vector<AnchoredPattern> patterns_;
  bool collect_ = false;
  Count best_ = -1;
  Mask best_mask_ = 0;
  std::uint64_t nodes_ = 0;
  bool exact_ = true;
  std::vector<Mask> found_;
};

void validate(const SearchInstance& inst) {
  if (inst.max_vertices > kSearchHardLimit) {
    throw InputError("search vertex limit cannot exceed " +
                     std::to_string(kSearchHardLimit));
  }
  if (inst.n > inst.max_vertices) {
    throw InputError("n = " + std::to_string(inst.n) + " exceeds the search limit " +
                     std::to_string(inst.max_vertices));
  }
  for (const Hypergraph3& f : inst.family) {
    if (f.vertex_count() > 6) throw InputError("forbidden patterns may have at most 6 vertices");
    if (f.edge_count() == 0) throw InputError("forbidden patterns must have an edge");
  }
}

Mask canonical_mask(const TripleTable& table, Mask m) {
  std::vector<Vertex> perm(table.n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  Mask best = m;
  do {
    Mask image = 0;
    for (Mask rest = m; rest != 0; rest &= rest - 1) {
      const Triple& t = table.triples[std::countr_zero(rest)];
      image |= Mask{1} << table.at(perm[t[0]], perm[t[1]], perm[t[2]]);
    }
    best = std::min(best, image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

SearchResult solve(const SearchInstance& inst) {
  validate(inst);
  ExtremalSearch search(inst);
  search.run(0, false);
  SearchResult out;
  out.value = search.best();
  out.witness = from_mask(search.table(), search.best_mask());
  out.nodes = search.nodes();
  out.exact = search.exact();
  return out;
}

EnumerationResult enumerate_extremal(const SearchInstance& inst) {
  validate(inst);
  if (inst.n > 6) throw InputError("enumeration needs n <= 6");
  EnumerationResult out;
  const SearchResult top = solve(inst);
  out.value = top.value;
  out.nodes = top.nodes;
  out.exact = top.exact;
  if (!top.exact) {
    out.classes.push_back(canonical_form(top.witness));
    return out;
  }
  ExtremalSearch search(inst);
  search.run(top.value, true);
  out.nodes += search.nodes();
  out.exact = search.exact();
  std::set<Mask> classes;
  for (Mask m : search.found()) classes.insert(canonical_mask(search.table(), m));
  for (Mask m : classes) out.classes.push_back(from_mask(search.table(), m));
  return out;
}

Hypergraph3 canonical_form(const Hypergraph3& h) {
  if (h.vertex_count() > kSearchHardLimit) {
    throw InputError("canonical form needs n <= " + std::to_string(kSearchHardLimit));
  }
  const TripleTable table(h.vertex_count());
  return from_mask(table, canonical_mask(table, to_mask(table, h)));
}

}  // namespace turan
