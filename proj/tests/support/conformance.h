// Copyright 2026 The Framing Authors.
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

// Hand-traced conformance cases shared by the unit tests and the
// acceptance runner.

#ifndef FRAMING_TESTS_SUPPORT_CONFORMANCE_H_
#define FRAMING_TESTS_SUPPORT_CONFORMANCE_H_

#include <functional>
#include <string>
#include <vector>

namespace framing::testing {

struct RegexCase {
  std::string input;
  bool expect_match;
  std::string note;
};

struct RegexTable {
  std::string pattern_name;
  std::vector<RegexCase> cases;
  // Evaluates one input with the production matcher for this pattern.
  std::function<bool(const std::string &)> matches;
};

const std::vector<RegexTable> &RegexTables();

struct AlgorithmCase {
  std::string name;
  // Expected outcome, traced by hand: a token surface ("lunged"), "absent",
  // "true"/"false", or a pair list "threatened>them stab>deputy".
  std::string expected;
  std::function<std::string()> run;
};

const std::vector<AlgorithmCase> &AlgorithmCases();

}  // namespace framing::testing

#endif  // FRAMING_TESTS_SUPPORT_CONFORMANCE_H_
