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

#include "turan/arith.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "turan/errors.hpp"

namespace turan {

Count checked_add(Count a, Count b) {
  Count out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in addition");
  }
  return out;
}

Count checked_mul(Count a, Count b) {
  Count out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in multiplication");
  }
  return out;
}

Count binomial(Count n, Count k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // Multiplicative form; every partial product is itself a binomial, and
  // dividing out gcd(acc, i) first keeps the intermediate exact.
  Count acc = 1;
  for (Count i = 1; i <= k; ++i) {
    const Count g = std::gcd(acc, i);
    const Count factor = (n - k + i) / (i / g);
    if (__builtin_mul_overflow(acc / g, factor, &acc)) {
      throw std::overflow_error("binomial(" + std::to_string(n) + ", " +
                                std::to_string(k) + ") overflows");
    }
  }
  return acc;
}

std::uint64_t default_node_budget(std::uint64_t fallback) {
  const char* env = std::getenv("TURAN_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || value == 0) {
    throw InputError("TURAN_BUDGET must be a positive integer, got '" +
                     std::string(env) + "'");
  }
  return value;
}

}  // namespace turan
