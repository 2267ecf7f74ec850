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

#pragma once

#include <iosfwd>
#include <string>

#include "turan/colored_turan.hpp"
#include "turan/hypergraph.hpp"

namespace turan {

// .h3: "n m" then m lines "u v w", u < v < w < n, strictly increasing.
// Malformed input throws ParseError naming the offending line.
Hypergraph3 read_h3(std::istream& in);
void write_h3(std::ostream& out, const Hypergraph3& h);
Hypergraph3 read_h3_file(const std::string& path);
void write_h3_file(const std::string& path, const Hypergraph3& h);

// .cmg: "n s" then per layer a count m_i followed by m_i lines "u v".
ColoredMultigraph read_cmg(std::istream& in);
void write_cmg(std::ostream& out, const ColoredMultigraph& m);
ColoredMultigraph read_cmg_file(const std::string& path);
void write_cmg_file(const std::string& path, const ColoredMultigraph& m);

}  // namespace turan
