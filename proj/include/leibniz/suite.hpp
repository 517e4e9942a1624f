// Copyright 2026 The leibniz-bimod Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEIBNIZ_SUITE_HPP
#define LEIBNIZ_SUITE_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace leibniz {

struct CriterionResult {
  int id = 0;
  std::string title;
  std::string reference;  // paper result the check instantiates
  bool pass = false;
  std::vector<std::string> details;
};

constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int id, std::uint64_t seed = 0);
std::vector<CriterionResult> run_paper_suite(std::uint64_t seed = 0);

// 0 when the failing criteria are exactly `expected_failures`, else 1.
int suite_exit_code(const std::vector<CriterionResult>& results, const std::set<int>& expected_failures);

}  // namespace leibniz

#endif  // LEIBNIZ_SUITE_HPP
