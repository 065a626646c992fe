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

#ifndef FRAMING_PIPELINE_H_
#define FRAMING_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "framing/analytics.h"
#include "framing/document.h"
#include "framing/frames.h"
#include "framing/records.h"
#include "framing/timeseries.h"

namespace framing {

namespace fs = std::filesystem;

// Settings shared by the subcommands. Paths left empty are not used.
struct RunConfig {
  fs::path corpus_dir;
  fs::path events_path;
  fs::path slants_path;
  fs::path lexicon_dir;
  fs::path output_dir;
  bool strict_attack = false;
  int smoothing_window = 15;
  WindowAlignment smoothing_alignment = WindowAlignment::kCentered;
  std::vector<int> granger_lags = {1, 2};
  bool granger_smoothed = false;
  StyleNormalizer normalizer = StyleNormalizer::kDocWords;
  int jobs = 1;
};

// Reads the lexicon directory: legal_language.txt, mental_illness.txt,
// criminal_record.txt, people_nouns.txt, race_terms.tsv and mft.tsv.
Lexicons LoadLexicons(const fs::path &dir);

// Every document of every *.conllu file under `dir`, files in name order.
// Throws ValidationError if there are none.
std::vector<ParsedDocument> LoadCorpus(const fs::path &dir);

struct ExtractResult {
  std::vector<FrameAnnotation> annotations;  // corpus order
  std::vector<std::string> diagnostics;
  int errors = 0;  // documents that could not be annotated
};

// Partitions and annotates every document on `jobs` worker threads. The
// result does not depend on `jobs`.
ExtractResult ExtractAll(const std::vector<ParsedDocument> &docs,
                         const EventCatalog &events, const Lexicons &lexicons,
                         const AttackConfig &attack, int jobs);

// Share of documents in which two frames start within `window` tokens of
// each other, for every frame pair.
struct OverlapRow {
  Frame a;
  Frame b;
  std::size_t both_present = 0;
  std::size_t within = 0;
  double share = 0;
};
std::vector<OverlapRow> SpanOverlapAudit(
    const std::vector<ParsedDocument> &docs,
    const std::vector<FrameAnnotation> &annotations, int window = 25);

// Reads newline-separated ids; blank lines and '#' comments are ignored.
std::set<std::string> LoadIdList(const fs::path &path);

void WriteFile(const fs::path &path, const std::string &content);

// Subcommand bodies. Each writes its outputs under config.output_dir and
// returns the number of hard errors.
int RunExtract(const RunConfig &config);
int RunAnalyze(const RunConfig &config, const fs::path &annotations_path);

struct TimeseriesInputs {
  std::optional<fs::path> annotations_path;
  std::optional<fs::path> protests_path;
  std::optional<fs::path> high_profile_path;  // event ids, excluded and pulsed
  std::vector<Frame> frames = {Frame::kRace, Frame::kUnarmed, Frame::kSystemic};
  std::map<std::string, fs::path> extra_series;  // name -> date,value CSV
};
int RunTimeseries(const RunConfig &config, const TimeseriesInputs &inputs);

int RunValidate(const RunConfig &config, const fs::path &annotations_path,
                const fs::path &gold_path);
// Query strings, one per event in id order.
std::string RunQuery(const EventCatalog &events);
int RunAudit(const RunConfig &config, const fs::path &annotations_path);

}  // namespace framing

#endif  // FRAMING_PIPELINE_H_
