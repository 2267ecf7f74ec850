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

#include "turan/formulas.hpp"

#include <algorithm>

#include "turan/colorings.hpp"
#include "turan/constructions.hpp"
#include "turan/errors.hpp"

namespace turan {

FormulaValue formula_emc(Count n, Count s, Count r) {
  if (n < 0 || s < 0 || r < 1) throw InputError("formula needs n, s >= 0 and r >= 1");
  const Count k = checked_mul(r, s + 1) - 1;
  const Count value = std::max(binomial(k, r), binomial(n, r) - binomial(n - s, r));
  return {value, n >= k && r >= 3};
}

Count formula_gerbner_small_s(Count n, Count s, Count r) {
  if (r < 2) throw InputError("formula needs r >= 2");
  if (s < 0 || n < s) throw InputError("formula needs n >= s >= 0");
  Count total = 0;
  for (Count i = 1; i <= s; ++i) {
    total = checked_add(total, checked_mul(binomial(s, i), binomial(n - s, r - i)));
  }
  return total;
}

Count formula_gerbner_linear(Count n, Count s, Count r) {
  if (r < 2) throw InputError("formula needs r >= 2");
  if (s < 0 || n < s) throw InputError("formula needs n >= s >= 0");
  return checked_mul(s, binomial(n - s, r - 1));
}

Count formula_conjectured(const Hypergraph3& pattern, Count n, Count s) {
  const ExtendedCount q = q_value(pattern).red_count;
  if (q.is_infinite()) throw InputError("pattern has no strong red-blue colouring");
  Count best = 0;
  for (Count i = 1; i <= static_cast<Count>(q.value()); ++i) {
    best = std::max(best, h_conjecture_edges(pattern, i, n, s));
  }
  return best;
}

}  // namespace turan
