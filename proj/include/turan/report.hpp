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
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace turan {

enum class Verdict { pass, fail, inconclusive };

std::string_view to_string(Verdict v);

// One compared quantity. \p relation is one of "==", "<", "<=", ">", ">=",
// "in" (closed interval [lo, hi] given as a two-element expected array) or
// "!=".
struct Check {
  std::string name;
  std::string relation;
  nlohmann::json expected;
  nlohmann::json observed;
  std::string provenance;  // how the expected value is obtained
  Verdict verdict = Verdict::fail;
};

struct Certificate {
  std::string id;  // unique, used for ordering
  int criterion = 0;
  std::string subject;
  nlohmann::json params = nlohmann::json::object();
  std::vector<Check> checks;
  nlohmann::json data = nlohmann::json::object();  // recorded, not judged
  double seconds = 0.0;

  // fail if any check fails, else inconclusive if any is, else pass.
  Verdict verdict() const;
};

enum class Scale { tiny, small, medium };

// Empty selects tiny; unknown names throw InputError.
Scale parse_scale(std::string_view name);
std::string_view to_string(Scale s);

// Grid and batch sizes used by the suite at one scale.
struct ScaleParams {
  std::vector<std::int64_t> grid_n;
  std::vector<std::int64_t> odd_n;        // extra odd sizes for the +1 case
  std::int64_t large_n = 0;               // single large K4- certificate
  std::size_t extremal_families = 0;
  std::size_t containment_cases = 0;
  std::size_t matching_cases = 0;
  std::size_t clique_cases = 0;
  std::size_t partition_graphs = 0;
  std::uint64_t budget = 0;
};

ScaleParams scale_params(Scale s);

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t inconclusive = 0;
};

struct Report {
  std::string suite;
  Scale scale = Scale::tiny;
  ScaleParams params;
  std::vector<Certificate> certificates;  // sorted by id

  Summary summary() const;
  // 0 all pass, 1 any fail, 2 any inconclusive and no fail.
  int exit_code() const;
  nlohmann::json to_json() const;
};

// Runs the fixed verification suite. Criteria are numbered 1..10; pass a
// subset in \p only to run just those.
Report verify_paper(Scale scale, const std::vector<int>& only = {});

// Fresh check whose verdict is evaluated from relation, expected, observed.
Check make_check(std::string name, std::string relation, nlohmann::json expected,
                 nlohmann::json observed, std::string provenance);

}  // namespace turan
