// Copyright 2026 The Edgeblock Authors.
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

// Minimal runner: each criterion prints one PASS/FAIL line.

#ifndef EDGEBLOCK_TESTS_ACCEPTANCE_HARNESS_H_
#define EDGEBLOCK_TESTS_ACCEPTANCE_HARNESS_H_

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

namespace edgeblock::acceptance {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id = 0;
  std::string name;
  double time_limit_seconds = 0;  // 0 = no limit
  std::function<Outcome()> check;
};

inline int run_all(const std::vector<Criterion>& criteria) {
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_seconds > 0 && seconds >= c.time_limit_seconds) {
      outcome.pass = false;
      outcome.detail += " [time limit exceeded]";
    }
    std::printf("[%s] criterion %2d  %-36s %s (%.1f s)\n", outcome.pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), outcome.detail.c_str(), seconds);
    std::fflush(stdout);
    failures += !outcome.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace edgeblock::acceptance

#endif  // EDGEBLOCK_TESTS_ACCEPTANCE_HARNESS_H_
