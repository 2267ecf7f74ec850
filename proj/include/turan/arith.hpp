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

namespace turan {

using Count = std::int64_t;

// Binomial coefficient; zero outside 0 <= k <= n. Throws std::overflow_error
// if the value does not fit in Count.
Count binomial(Count n, Count k);

Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);

inline Count floor_div(Count a, Count b) {
  Count q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace turan
