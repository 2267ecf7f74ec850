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

#include <cstdint>
#include <stdexcept>

namespace turan {

// Precondition violations: out-of-range vertices, illegal construction
// parameters, malformed sets.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed .h3 / .cmg text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A node budget ran out before an exhaustive search could finish.
class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Node cap used by the exhaustive searches when the caller supplies none.
// The TURAN_BUDGET environment variable overrides \p fallback.
std::uint64_t default_node_budget(std::uint64_t fallback = 200'000'000ULL);

}  // namespace turan
