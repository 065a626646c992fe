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

#ifndef FRAMING_SIMULATE_H_
#define FRAMING_SIMULATE_H_

#include <cstdint>
#include <random>
#include <vector>

namespace framing {

using Rng = std::mt19937_64;

// x[t] = beta0 * x[t-1] + beta1 * pulse[t] + c + N(0, sigma), x[0] at the
// stationary mean of the pulse-free process.
std::vector<double> SimulateIntervention(const std::vector<int> &pulse,
                                         double beta0, double beta1, double c,
                                         double sigma, Rng &rng);

// Pulse indicator of length n with `count` distinct pulses at t >= 1.
std::vector<int> RandomPulses(std::size_t n, std::size_t count, Rng &rng);

// cause ~ iid N(0, 1); effect[t] = coef * cause[t-1] + N(0, sigma).
struct CausalPair {
  std::vector<double> cause;
  std::vector<double> effect;
};
CausalPair SimulateCausalPair(std::size_t n, double coef, double sigma, Rng &rng);

std::vector<double> WhiteNoise(std::size_t n, double sigma, Rng &rng);

}  // namespace framing

#endif  // FRAMING_SIMULATE_H_
