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

#include "turan/arith.hpp"
#include "turan/hypergraph.hpp"

namespace turan {

// A closed-form value together with whether the parameters lie in the
// range where the associated claim is stated. Out-of-range values are still
// computed.
struct FormulaValue {
  Count value = 0;
  bool in_range = true;
};

// max{C(r(s+1)-1, r), C(n,r) - C(n-s,r)}; in range iff n >= r(s+1)-1, r >= 3.
FormulaValue formula_emc(Count n, Count s, Count r);

// sum_{i=1..s} C(s,i) C(n-s, r-i). Requires r >= 2.
Count formula_gerbner_small_s(Count n, Count s, Count r);

// Leading term s*C(n-s, r-1). Requires r >= 2.
Count formula_gerbner_linear(Count n, Count s, Count r);

// Largest h_conjecture edge count over i = 1..q(F). Requires chi(F) = 2 and
// a finite q(F) <= s.
Count formula_conjectured(const Hypergraph3& pattern, Count n, Count s);

}  // namespace turan
