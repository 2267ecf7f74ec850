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

// Runs each acceptance criterion through the C interface and prints one
// pass/fail line per criterion with its wall time against the limit.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"
#include "turan/turan.h"

namespace {

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
};

constexpr Criterion kCriteria[] = {
    {1, "construction sizes match closed forms", 5},
    {2, "freeness and matching certificates", 60},
    {3, "q values of the pattern catalog", 1},
    {4, "H_B beats the conjectured value", 1},
    {5, "coloured maxima equal s*floor(n^2/4)", 1800},
    {6, "max_colored_sum(4,3,4) bracket", 1800},
    {7, "exact tiny extremal values", 600},
    {8, "F32 lower bounds below threshold", 600},
    {9, "degree partition properties", 60},
    {10, "oracle equivalence batteries", 600},
};

}  // namespace

int main(int argc, char** argv) {
  const char* scale = argc > 1 ? argv[1] : "small";
  int failures = 0;
  int inconclusive = 0;
  for (const Criterion& c : kCriteria) {
    const auto start = std::chrono::steady_clock::now();
    char* text = nullptr;
    int code = 0;
    const turan_status st = turan_verify_paper(scale, &c.id, 1, &text, &code);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (st != TURAN_OK) {
      std::printf("criterion %2d  FAIL  %s: %s\n", c.id, turan_status_name(st), turan_last_error());
      ++failures;
      continue;
    }
    const nlohmann::json report = nlohmann::json::parse(text);
    turan_string_free(text);
    const auto& s = report["summary"];
    const int pass = s["pass"].get<int>();
    const int fail = s["fail"].get<int>();
    const int inc = s["inconclusive"].get<int>();
    const bool in_time = secs < c.limit_seconds;
    const char* verdict = "PASS";
    if (fail > 0 || !in_time || pass + fail + inc == 0) {
      verdict = "FAIL";
      ++failures;
    } else if (inc > 0) {
      verdict = "INCONCLUSIVE";
      ++inconclusive;
    }
    std::printf("criterion %2d  %-12s %-40s %3d/%-3d certificates  %8.3fs (limit %gs)\n", c.id,
                verdict, c.title, pass, pass + fail + inc, secs, c.limit_seconds);
    for (const auto& cert : report["certificates"]) {
      if (cert["verdict"] != "pass") {
        std::printf("    %s  %s\n", cert["verdict"].get<std::string>().c_str(),
                    cert["id"].get<std::string>().c_str());
      }
    }
  }
  std::printf("%s at scale %s: %d failing, %d inconclusive\n",
              failures == 0 ? "ACCEPTED" : "REJECTED", scale, failures, inconclusive);
  if (failures > 0) return 1;
  return inconclusive > 0 ? 2 : 0;
}
