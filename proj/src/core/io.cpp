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

#include "turan/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "turan/errors.hpp"

namespace turan {
namespace {

// Reads whitespace-separated unsigned integers one non-blank line at a time.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::vector<std::uint64_t> next(std::size_t expected, const char* what) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::vector<std::uint64_t> values;
      std::string_view rest(line);
      while (true) {
        const auto start = rest.find_first_not_of(" \t\r");
        if (start == std::string_view::npos) break;
        rest.remove_prefix(start);
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
        if (ec != std::errc{} || (ptr != rest.data() + rest.size() &&
                                  *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
          fail("expected non-negative integers");
        }
        values.push_back(v);
        rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
      }
      if (values.size() != expected) {
        fail("expected " + std::to_string(expected) + " integers for " + what);
      }
      return values;
    }
    fail(std::string("unexpected end of input, wanted ") + what);
  }

  void expect_end() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (line.find_first_not_of(" \t\r") != std::string::npos) {
        fail("trailing content");
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(line_no_) + ": " + msg);
  }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

Vertex vertex_count_field(const LineReader& r, std::uint64_t n) {
  if (n > 0xFFFF'FFFFull) r.fail("vertex count too large");
  return static_cast<Vertex>(n);
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  return out;
}

}  // namespace

Hypergraph3 read_h3(std::istream& in) {
  LineReader r(in);
  const auto head = r.next(2, "header 'n m'");
  const Vertex n = vertex_count_field(r, head[0]);
  std::vector<Triple> edges;
  for (std::uint64_t i = 0; i < head[1]; ++i) {
    const auto e = r.next(3, "an edge");
    if (!(e[0] < e[1] && e[1] < e[2])) r.fail("edge vertices must be strictly increasing");
    if (e[2] >= n) r.fail("vertex out of range");
    const Triple t{static_cast<Vertex>(e[0]), static_cast<Vertex>(e[1]),
                   static_cast<Vertex>(e[2])};
    if (!edges.empty() && !(edges.back() < t)) {
      r.fail(edges.back() == t ? "duplicate edge" : "edges must be in ascending order");
    }
    edges.push_back(t);
  }
  r.expect_end();
  return Hypergraph3(n, std::move(edges));
}

void write_h3(std::ostream& out, const Hypergraph3& h) {
  out << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const Triple& t : h.edges()) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

Hypergraph3 read_h3_file(const std::string& path) {
  auto in = open_in(path);
  return read_h3(in);
}

void write_h3_file(const std::string& path, const Hypergraph3& h) {
  auto out = open_out(path);
  write_h3(out, h);
  if (!out) throw InputError("write failed: " + path);
}

ColoredMultigraph read_cmg(std::istream& in) {
  LineReader r(in);
  const auto head = r.next(2, "header 'n s'");
  const Vertex n = vertex_count_field(r, head[0]);
  if (head[1] > 32) r.fail("at most 32 layers are supported");
  std::vector<Graph2> layers;
  for (std::uint64_t i = 0; i < head[1]; ++i) {
    const auto count = r.next(1, "a layer edge count");
    std::vector<Pair> edges;
    for (std::uint64_t j = 0; j < count[0]; ++j) {
      const auto e = r.next(2, "a layer edge");
      if (!(e[0] < e[1])) r.fail("pair vertices must be strictly increasing");
      if (e[1] >= n) r.fail("vertex out of range");
      const Pair p{static_cast<Vertex>(e[0]), static_cast<Vertex>(e[1])};
      if (!edges.empty() && !(edges.back() < p)) {
        r.fail(edges.back() == p ? "duplicate pair" : "pairs must be in ascending order");
      }
      edges.push_back(p);
    }
    layers.emplace_back(n, std::move(edges));
  }
  r.expect_end();
  return ColoredMultigraph(n, std::move(layers));
}

void write_cmg(std::ostream& out, const ColoredMultigraph& m) {
  out << m.vertex_count() << ' ' << m.layer_count() << '\n';
  for (const Graph2& g : m.layers()) {
    out << g.edge_count() << '\n';
    for (const Pair& p : g.edges()) out << p.u << ' ' << p.v << '\n';
  }
}

ColoredMultigraph read_cmg_file(const std::string& path) {
  auto in = open_in(path);
  return read_cmg(in);
}

void write_cmg_file(const std::string& path, const ColoredMultigraph& m) {
  auto out = open_out(path);
  write_cmg(out, m);
  if (!out) throw InputError("write failed: " + path);
}

}  // namespace turan
