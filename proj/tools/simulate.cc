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

// Writes the synthetic series used by the time-series fixtures.

#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "framing/errors.h"
#include "framing/pipeline.h"
#include "framing/simulate.h"
#include "framing/timeseries.h"

int main(int argc, char **argv) {
  CLI::App app{"Generate seeded synthetic series"};
  std::uint64_t seed = 20200904;
  std::size_t n = 500;
  std::filesystem::path out;
  std::string start = "2020-01-01";
  app.add_option("--seed", seed, "Random seed")->capture_default_str();
  app.add_option("--length", n, "Series length")->check(CLI::Range(20, 100000))->capture_default_str();
  app.add_option("--start", start, "First date")->capture_default_str();
  app.add_option("--out", out, "Output directory")->required();
  CLI11_PARSE(app, argc, argv);

  try {
    const framing::Date first = framing::Date::Parse(start);
    auto to_series = [&](const std::string &id, const std::vector<double> &values) {
      std::vector<std::pair<framing::Date, double>> points;
      for (std::size_t i = 0; i < values.size(); ++i) {
        points.emplace_back(first.AddDays(static_cast<int>(i)), values[i]);
      }
      return framing::SeriesFromPoints(id, std::move(points));
    };
    std::filesystem::create_directories(out);
    framing::Rng rng(seed);
    const framing::CausalPair pair = framing::SimulateCausalPair(n, 0.9, 0.1, rng);
    framing::WriteFile(out / "cause.csv", framing::SeriesToCsv(to_series("cause", pair.cause)));
    framing::WriteFile(out / "effect.csv", framing::SeriesToCsv(to_series("effect", pair.effect)));
    framing::WriteFile(out / "noise.csv",
                       framing::SeriesToCsv(to_series("noise", framing::WhiteNoise(n, 1.0, rng))));
  } catch (const framing::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
