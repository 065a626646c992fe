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

#include "framing/simulate.h"

#include <algorithm>
#include <numeric>

#include "framing/errors.h"

namespace framing {

std::vector<double> SimulateIntervention(const std::vector<int> &pulse,
                                         double beta0, double beta1, double c,
                                         double sigma, Rng &rng) {
  std::normal_distribution<double> noise(0.0, sigma);
  std::vector<double> x(pulse.size());
  if (x.empty()) return x;
  x[0] = c / (1.0 - beta0);
  for (std::size_t t = 1; t < x.size(); ++t) {
    x[t] = beta0 * x[t - 1] + beta1 * pulse[t] + c + noise(rng);
  }
  return x;
}

std::vector<int> RandomPulses(std::size_t n, std::size_t count, Rng &rng) {
  if (n < 2 || count > n - 1) throw ValidationError("too many pulses for the series");
  std::vector<std::size_t> idx(n - 1);
  std::iota(idx.begin(), idx.end(), 1);
  std::vector<int> pulse(n, 0);
  for (std::size_t k = 0; k < count; ++k) {
    std::uniform_int_distribution<std::size_t> pick(k, idx.size() - 1);
    std::swap(idx[k], idx[pick(rng)]);
    pulse[idx[k]] = 1;
  }
  return pulse;
}

CausalPair SimulateCausalPair(std::size_t n, double coef, double sigma, Rng &rng) {
  CausalPair p;
  p.cause = WhiteNoise(n, 1.0, rng);
  std::normal_distribution<double> noise(0.0, sigma);
  p.effect.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    p.effect[t] = (t > 0 ? coef * p.cause[t - 1] : 0.0) + noise(rng);
  }
  return p;
}

std::vector<double> WhiteNoise(std::size_t n, double sigma, Rng &rng) {
  std::normal_distribution<double> noise(0.0, sigma);
  std::vector<double> out(n);
  for (auto &v : out) v = noise(rng);
  return out;
}

}  // namespace framing
