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

// Slow reference computations used as test oracles.

#ifndef FRAMING_TESTS_SUPPORT_ORACLES_H_
#define FRAMING_TESTS_SUPPORT_ORACLES_H_

#include <vector>

namespace framing::testing {

// U of `a` by direct pair counting: 1 per (a > b) pair, 1/2 per tie.
double PairwiseU(const std::vector<double> &a, const std::vector<double> &b);

// Two-sided exact Mann-Whitney p-value by enumerating every way to split
// the pooled sample into groups of |a| and |b|.
double EnumeratedMannWhitneyP(const std::vector<double> &a, const std::vector<double> &b);

}  // namespace framing::testing

#endif  // FRAMING_TESTS_SUPPORT_ORACLES_H_
