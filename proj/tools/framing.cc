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

// Command-line entry point: extract, analyze, timeseries, validate, query
// and audit subcommands over file-based inputs.

#include <iostream>
#include <map>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "framing/errors.h"
#include "framing/frames.h"
#include "framing/pipeline.h"
#include "framing/records.h"

namespace {

using framing::RunConfig;

int Report(int errors, const char *command) {
  if (errors > 0) {
    std::cerr << command << ": " << errors << " error(s); see the diagnostics log\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Media frame extraction and analysis"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  RunConfig config;
  int jobs = 1;
  app.add_option("--jobs,-j", jobs, "Worker threads for extraction (0 = hardware)")
      ->check(CLI::NonNegativeNumber);

  std::string annotations, gold, protests, high_profile;
  std::vector<std::string> series_args, frame_args;
  std::string normalizer = "words", alignment = "centered";

  auto *extract = app.add_subcommand("extract", "Annotate every document of a corpus");
  extract->add_option("--corpus", config.corpus_dir, "Directory of .conllu files")->required();
  extract->add_option("--events", config.events_path, "Event records (JSONL)")->required();
  extract->add_option("--lexicons", config.lexicon_dir, "Lexicon directory")->required();
  extract->add_option("--out", config.output_dir, "Output directory")->required();
  extract->add_flag("--strict-attack", config.strict_attack,
                    "Require a VICTIM subject for the attack frame");

  auto *analyze = app.add_subcommand("analyze", "Partisan comparison tables");
  analyze->add_option("--annotations", annotations, "Annotations (JSONL)")->required();
  analyze->add_option("--slants", config.slants_path, "Outlet slant table (TSV)")->required();
  analyze->add_option("--events", config.events_path, "Event records for conditional tables");
  analyze->add_option("--out", config.output_dir, "Output directory")->required();
  analyze->add_option("--normalizer", normalizer, "Style denominator")
      ->check(CLI::IsMember({"words", "victim"}))
      ->capture_default_str();

  auto *timeseries = app.add_subcommand("timeseries", "Daily series, intervention and Granger tests");
  timeseries->add_option("--annotations", annotations, "Annotations (JSONL)");
  timeseries->add_option("--events", config.events_path, "Event records (JSONL)");
  timeseries->add_option("--protests", protests, "Protest counts (CSV with date,count)");
  timeseries->add_option("--high-profile", high_profile,
                         "Event ids excluded from the series and used as pulses");
  timeseries->add_option("--frames", frame_args, "Frames to build series for")
      ->delimiter(',');
  timeseries->add_option("--series", series_args, "Extra series as name=path (date,value CSV)");
  timeseries->add_option("--smoothing-window", config.smoothing_window, "Rolling window in days")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  timeseries->add_option("--smoothing-alignment", alignment, "Window alignment")
      ->check(CLI::IsMember({"centered", "trailing"}))
      ->capture_default_str();
  timeseries->add_option("--granger-lags", config.granger_lags, "Granger lags")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  timeseries->add_flag("--granger-smoothed", config.granger_smoothed,
                       "Run Granger tests on smoothed series");
  timeseries->add_option("--out", config.output_dir, "Output directory")->required();

  auto *validate = app.add_subcommand("validate", "Extraction metrics against gold labels");
  validate->add_option("--annotations", annotations, "Annotations (JSONL)")->required();
  validate->add_option("--gold", gold, "Gold annotations (JSONL)")->required();
  validate->add_option("--out", config.output_dir, "Output directory")->required();

  auto *query = app.add_subcommand("query", "Print one search query per event");
  query->add_option("--events", config.events_path, "Event records (JSONL)")->required();

  auto *audit = app.add_subcommand("audit", "Frame span-overlap report");
  audit->add_option("--annotations", annotations, "Annotations (JSONL)")->required();
  audit->add_option("--corpus", config.corpus_dir, "Directory of .conllu files")->required();
  audit->add_option("--out", config.output_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    // Help and version requests exit 0; malformed invocations are input errors.
    return app.exit(e) == 0 ? 0 : 1;
  }

  config.jobs = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
  config.normalizer = normalizer == "victim" ? framing::StyleNormalizer::kVictimTokens
                                             : framing::StyleNormalizer::kDocWords;
  config.smoothing_alignment = alignment == "trailing" ? framing::WindowAlignment::kTrailing
                                                       : framing::WindowAlignment::kCentered;
  try {
    if (*extract) return Report(framing::RunExtract(config), "extract");
    if (*analyze) return Report(framing::RunAnalyze(config, annotations), "analyze");
    if (*timeseries) {
      framing::TimeseriesInputs inputs;
      if (!annotations.empty()) inputs.annotations_path = annotations;
      if (!protests.empty()) inputs.protests_path = protests;
      if (!high_profile.empty()) inputs.high_profile_path = high_profile;
      if (!frame_args.empty()) {
        inputs.frames.clear();
        for (const auto &f : frame_args) {
          auto frame = framing::ParseFrame(f);
          if (!frame) throw framing::ValidationError("unknown frame '" + f + "'");
          inputs.frames.push_back(*frame);
        }
      }
      for (const auto &arg : series_args) {
        const auto eq = arg.find('=');
        if (eq == std::string::npos || eq == 0) {
          throw framing::ValidationError("--series expects name=path, got '" + arg + "'");
        }
        inputs.extra_series[arg.substr(0, eq)] = arg.substr(eq + 1);
      }
      return Report(framing::RunTimeseries(config, inputs), "timeseries");
    }
    if (*validate) return Report(framing::RunValidate(config, annotations, gold), "validate");
    if (*query) {
      std::cout << framing::RunQuery(framing::LoadEvents(config.events_path));
      return 0;
    }
    if (*audit) return Report(framing::RunAudit(config, annotations), "audit");
  } catch (const framing::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
