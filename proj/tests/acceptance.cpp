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

// Acceptance criteria 1-11, one line per criterion.
// Usage: acceptance [--verbose] [--seed N] [--expect-fail ID]...
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

#include "leibniz/random.hpp"
#include "leibniz/suite.hpp"

int main(int argc, char** argv) {
  bool verbose = false;
  std::uint64_t seed = leibniz::resolve_seed(0);
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--verbose") {
      verbose = true;
    } else if (arg == "--seed" && i + 1 < argc) {
      seed = std::stoull(argv[++i]);
    } else if (arg == "--expect-fail" && i + 1 < argc) {
      expected.insert(std::stoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--verbose] [--seed N] [--expect-fail ID]...\n";
      return 2;
    }
  }
  const auto results = leibniz::run_paper_suite(seed);
  int passed = 0;
  for (const auto& r : results) {
    passed += r.pass;
    std::cout << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "\n";
    if (verbose || !r.pass)
      for (const auto& d : r.details) std::cout << "    " << d << "\n";
  }
  std::cout << passed << "/" << results.size() << " criteria pass\n";
  if (!expected.empty()) {
    std::cout << "expected failures:";
    for (int id : expected) std::cout << " " << id;
    std::cout << "\n";
  }
  return leibniz::suite_exit_code(results, expected);
}
