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

#include "framing/pipeline.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "framing/annotation_io.h"
#include "framing/conllu.h"
#include "framing/errors.h"
#include "framing/partition.h"
#include "framing/query.h"
#include "framing/stats.h"
#include "framing/text_util.h"
#include "framing/validation.h"

namespace framing {

namespace {

std::string Num(double v, int digits = 6) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

std::string JoinLines(const std::vector<std::string> &lines) {
  std::string out;
  for (const auto &l : lines) out += l + '\n';
  return out;
}

void RequirePath(const fs::path &p, const char *what) {
  if (p.empty()) throw ValidationError(std::string("missing ") + what + " path");
  if (!fs::exists(p)) throw ValidationError(std::string(what) + " not found: " + p.string());
}

void PrepareOutput(const RunConfig &config) {
  if (config.output_dir.empty()) throw ValidationError("missing output directory");
  fs::create_directories(config.output_dir);
}

// Document-order token index of the token containing `offset`.
int TokenAt(const std::vector<int> &starts, int offset) {
  auto it = std::upper_bound(starts.begin(), starts.end(), offset);
  return static_cast<int>(it - starts.begin()) - 1;
}

}  // namespace

Lexicons LoadLexicons(const fs::path &dir) {
  RequirePath(dir, "lexicon directory");
  Lexicons lex;
  lex.legal_language = LoadLexicon(dir / "legal_language.txt", "legal_language");
  lex.mental_illness = LoadLexicon(dir / "mental_illness.txt", "mental_illness");
  lex.criminal_record = LoadLexicon(dir / "criminal_record.txt", "criminal_record");
  lex.people_nouns = LoadLexicon(dir / "people_nouns.txt", "people_nouns");
  lex.race_terms = LoadRaceTerms(dir / "race_terms.tsv");
  lex.moral = LoadMoralDictionary(dir / "mft.tsv");
  return lex;
}

std::vector<ParsedDocument> LoadCorpus(const fs::path &dir) {
  RequirePath(dir, "corpus directory");
  std::vector<fs::path> files;
  for (const auto &entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".conllu") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<ParsedDocument> docs;
  std::set<std::string> seen;
  for (const auto &f : files) {
    std::vector<ParsedDocument> part;
    try {
      part = ParseConllu(ReadFile(f));
    } catch (const ParseError &e) {
      throw ParseError(f.filename().string() + ": " + e.what(), e.line());
    }
    for (auto &d : part) {
      if (!seen.insert(d.doc_id).second) {
        throw ConflictError("duplicate doc_id '" + d.doc_id + "' in " + f.string());
      }
      docs.push_back(std::move(d));
    }
  }
  if (docs.empty()) throw ValidationError("no documents found under " + dir.string());
  return docs;
}

ExtractResult ExtractAll(const std::vector<ParsedDocument> &docs,
                         const EventCatalog &events, const Lexicons &lexicons,
                         const AttackConfig &attack, int jobs) {
  struct Slot {
    std::optional<FrameAnnotation> annotation;
    std::vector<std::string> messages;
    bool failed = false;
  };
  std::vector<Slot> slots(docs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < docs.size(); i = next++) {
      const ParsedDocument &doc = docs[i];
      Slot &slot = slots[i];
      auto it = events.find(doc.event_id);
      if (it == events.end()) {
        slot.failed = true;
        slot.messages.push_back(doc.doc_id + ": unknown event_id '" + doc.event_id + "'");
        continue;
      }
      try {
        const VictimMatcher matcher = BuildVictimMatcher(it->second, lexicons.race_terms);
        PartitionResult pr = Partition(doc, matcher, lexicons.people_nouns);
        for (auto &w : pr.warnings) slot.messages.push_back(doc.doc_id + ": " + w);
        slot.annotation = Annotate(doc, it->second, pr.partition, lexicons, attack);
      } catch (const Error &e) {
        slot.failed = true;
        slot.messages.push_back(doc.doc_id + ": " + e.what());
      }
    }
  };
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(docs.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto &t : pool) t.join();

  ExtractResult result;
  for (auto &slot : slots) {
    if (slot.annotation) result.annotations.push_back(std::move(*slot.annotation));
    for (auto &m : slot.messages) result.diagnostics.push_back(std::move(m));
    if (slot.failed) ++result.errors;
  }
  return result;
}

std::vector<OverlapRow> SpanOverlapAudit(
    const std::vector<ParsedDocument> &docs,
    const std::vector<FrameAnnotation> &annotations, int window) {
  std::map<std::string, const ParsedDocument *> by_id;
  for (const auto &d : docs) by_id[d.doc_id] = &d;
  std::vector<OverlapRow> rows;
  for (int a = 0; a < kNumFrames; ++a) {
    for (int b = a + 1; b < kNumFrames; ++b) {
      rows.push_back({AllFrames()[a], AllFrames()[b]});
    }
  }
  std::size_t counted = 0;
  for (const auto &ann : annotations) {
    auto it = by_id.find(ann.doc_id);
    if (it == by_id.end()) {
      throw ValidationError("annotation '" + ann.doc_id + "' has no document");
    }
    ++counted;
    std::vector<int> starts;
    for (const auto &ref : it->second->tokens()) {
      starts.push_back(it->second->at(ref).char_offset);
    }
    std::array<std::optional<int>, kNumFrames> tok{};
    for (int f = 0; f < kNumFrames; ++f) {
      if (ann.frame_offsets[f]) tok[f] = TokenAt(starts, *ann.frame_offsets[f]);
    }
    std::size_t r = 0;
    for (int a = 0; a < kNumFrames; ++a) {
      for (int b = a + 1; b < kNumFrames; ++b, ++r) {
        if (!tok[a] || !tok[b]) continue;
        ++rows[r].both_present;
        if (std::abs(*tok[a] - *tok[b]) <= window) ++rows[r].within;
      }
    }
  }
  for (auto &row : rows) {
    row.share = counted ? static_cast<double>(row.within) / counted : 0.0;
  }
  return rows;
}

std::set<std::string> LoadIdList(const fs::path &path) {
  std::set<std::string> ids;
  std::istringstream in(ReadFile(path));
  std::string line;
  while (std::getline(in, line)) {
    const std::string id(Trim(line));
    if (id.empty() || id[0] == '#') continue;
    ids.insert(id);
  }
  return ids;
}

void WriteFile(const fs::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  if (!out) throw Error("write failed for " + path.string());
}

int RunExtract(const RunConfig &config) {
  RequirePath(config.events_path, "events");
  const EventCatalog events = LoadEvents(config.events_path);
  const Lexicons lexicons = LoadLexicons(config.lexicon_dir);
  const std::vector<ParsedDocument> docs = LoadCorpus(config.corpus_dir);
  AttackConfig attack;
  attack.strict = config.strict_attack;
  const ExtractResult result = ExtractAll(docs, events, lexicons, attack, config.jobs);
  PrepareOutput(config);
  WriteFile(config.output_dir / "annotations.jsonl", WriteAnnotations(result.annotations));
  WriteFile(config.output_dir / "extract_diagnostics.log", JoinLines(result.diagnostics));
  return result.errors;
}

int RunAnalyze(const RunConfig &config, const fs::path &annotations_path) {
  RequirePath(annotations_path, "annotations");
  RequirePath(config.slants_path, "slants");
  const auto annotations = LoadAnnotations(annotations_path);
  const SlantCatalog slants = LoadSlants(config.slants_path);
  const GroupAssignment groups = AssignGroups(annotations, slants);
  PrepareOutput(config);
  Diagnostics diag;
  int errors = 0;
  auto table = [&](const char *name, auto &&compute) {
    try {
      WriteFile(config.output_dir / name, compute());
    } catch (const UndefinedStatistic &e) {
      ++errors;
      diag.Add(std::string(name) + ": " + e.what());
    }
  };
  table("inclusion.csv", [&] { return ComparisonsToCsv(InclusionProportions(annotations, groups)); });
  table("ordering.csv", [&] { return ComparisonsToCsv(OrderingStats(annotations, groups, &diag)); });
  table("style.csv", [&] {
    return ComparisonsToCsv(StyleFrequencies(annotations, groups, config.normalizer, &diag));
  });
  table("moral.csv", [&] { return ComparisonsToCsv(MoralGroupProportions(annotations, groups)); });

  std::vector<LeaningRegression> leaning;
  for (Frame f : AllFrames()) {
    try {
      leaning.push_back(RegressOnLeaning(annotations, slants, f));
    } catch (const UndefinedStatistic &e) {
      diag.Add(std::string("leaning: ") + e.what());
    }
  }
  WriteFile(config.output_dir / "leaning.csv", LeaningToCsv(leaning));

  if (!config.events_path.empty()) {
    const EventCatalog events = LoadEvents(config.events_path);
    std::vector<GroupComparison> conditional, agenda;
    for (const ConditionalRow &row : StandardConditionalRows()) {
      try {
        const auto rows = ConditionalInclusion(annotations, events, groups, row.condition);
        GroupComparison c = rows[static_cast<int>(row.frame)];
        c.id = row.label;
        conditional.push_back(std::move(c));
      } catch (const UndefinedStatistic &e) {
        diag.Add("conditional " + row.label + ": " + e.what());
      }
      try {
        agenda.push_back(AgendaSetting(annotations, events, groups, row.label, row.condition));
      } catch (const UndefinedStatistic &e) {
        diag.Add("agenda " + row.label + ": " + e.what());
      }
    }
    WriteFile(config.output_dir / "conditional.csv", ComparisonsToCsv(conditional));
    WriteFile(config.output_dir / "agenda.csv", ComparisonsToCsv(agenda));
  } else {
    diag.Add("conditional: no events file given; skipped");
  }
  WriteFile(config.output_dir / "analyze_diagnostics.log", JoinLines(diag.messages));
  return errors;
}

int RunTimeseries(const RunConfig &config, const TimeseriesInputs &inputs) {
  PrepareOutput(config);
  Diagnostics diag;
  int errors = 0;

  std::set<std::string> high_profile;
  std::set<Date> pulses;
  if (inputs.high_profile_path) {
    high_profile = LoadIdList(*inputs.high_profile_path);
    RequirePath(config.events_path, "events");
    const EventCatalog events = LoadEvents(config.events_path);
    for (const auto &id : high_profile) {
      auto it = events.find(id);
      if (it == events.end() || !it->second.date) {
        throw ValidationError("high-profile event '" + id + "' has no dated event record");
      }
      pulses.insert(*it->second.date);
    }
  }

  std::vector<FrameSeries> raw;
  if (inputs.annotations_path) {
    const auto annotations = LoadAnnotations(*inputs.annotations_path);
    for (Frame f : inputs.frames) raw.push_back(BuildSeries(annotations, f, high_profile));
  }
  for (const auto &[name, path] : inputs.extra_series) {
    raw.push_back(ParseSeriesCsv(ReadFile(path), name));
  }
  std::optional<FrameSeries> protests;
  if (inputs.protests_path) protests = ProtestSeries(LoadProtestCounts(*inputs.protests_path));

  auto smooth = [&](const FrameSeries &s) -> std::optional<FrameSeries> {
    try {
      return RollingSmooth(s, config.smoothing_window, config.smoothing_alignment);
    } catch (const UndefinedStatistic &e) {
      diag.Add("smoothing " + s.id + ": " + e.what());
      return std::nullopt;
    }
  };
  std::vector<std::optional<FrameSeries>> smoothed;
  for (const auto &s : raw) {
    WriteFile(config.output_dir / ("series_" + s.id + ".csv"), SeriesToCsv(s));
    if (!s.empty_days.empty()) {
      diag.Add("series " + s.id + ": " + std::to_string(s.empty_days.size()) +
               " day(s) without articles set to 0");
    }
    smoothed.push_back(smooth(s));
    if (smoothed.back()) {
      WriteFile(config.output_dir / ("smoothed_" + s.id + ".csv"), SeriesToCsv(*smoothed.back()));
    }
  }

  std::ostringstream corr;
  corr << "a,b,pearson_raw,pearson_smoothed\n";
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (std::size_t j = i + 1; j < raw.size(); ++j) {
      auto value = [&](const FrameSeries &a, const FrameSeries &b) -> std::string {
        try {
          return Num(SeriesPearson(a, b));
        } catch (const UndefinedStatistic &e) {
          diag.Add("pearson " + a.id + "/" + b.id + ": " + e.what());
          return "NA";
        }
      };
      corr << raw[i].id << ',' << raw[j].id << ',' << value(raw[i], raw[j]) << ','
           << (smoothed[i] && smoothed[j] ? value(*smoothed[i], *smoothed[j]) : "NA")
           << '\n';
    }
  }
  WriteFile(config.output_dir / "correlations.csv", corr.str());

  if (!pulses.empty()) {
    std::ostringstream out;
    out << "series,beta0,se_beta0,beta1,se_beta1,c,se_c,p_beta1,stars,pulses\n";
    for (const auto &s : raw) {
      try {
        const InterventionFit fit = FitIntervention(s, pulses);
        out << s.id << ',' << Num(fit.beta0) << ',' << Num(fit.se_beta0) << ','
            << Num(fit.beta1) << ',' << Num(fit.se_beta1) << ',' << Num(fit.c) << ','
            << Num(fit.se_c) << ',' << Num(fit.p_beta1) << ','
            << SignificanceStars(fit.p_beta1) << ',' << fit.pulse_dates.size() << '\n';
      } catch (const Error &e) {
        diag.Add("intervention " + s.id + ": " + e.what());
      }
    }
    WriteFile(config.output_dir / "intervention.csv", out.str());
  }

  std::vector<std::pair<const FrameSeries *, const FrameSeries *>> pairs;
  std::optional<FrameSeries> protests_used;
  auto pick = [&](std::size_t i) -> const FrameSeries * {
    return config.granger_smoothed && smoothed[i] ? &*smoothed[i] : &raw[i];
  };
  if (protests) {
    protests_used = config.granger_smoothed ? smooth(*protests) : protests;
    if (!protests_used) protests_used = protests;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      pairs.emplace_back(&*protests_used, pick(i));
      pairs.emplace_back(pick(i), &*protests_used);
    }
  } else {
    for (std::size_t i = 0; i < raw.size(); ++i) {
      for (std::size_t j = 0; j < raw.size(); ++j) {
        if (i != j) pairs.emplace_back(pick(i), pick(j));
      }
    }
  }
  std::ostringstream granger;
  granger << "cause,effect,lag,f,p,dof_num,dof_den,stars\n";
  for (const auto &[cause, effect] : pairs) {
    for (int lag : config.granger_lags) {
      try {
        const GrangerResult g = Granger(*cause, *effect, lag);
        granger << g.cause << ',' << g.effect << ',' << g.lag << ','
                << Num(g.f_statistic, 10) << ',' << Num(g.p_value, 10) << ','
                << g.dof_num << ',' << g.dof_den << ',' << SignificanceStars(g.p_value)
                << '\n';
      } catch (const Error &e) {
        ++errors;
        diag.Add("granger " + cause->id + "->" + effect->id + ": " + e.what());
      }
    }
  }
  WriteFile(config.output_dir / "granger.csv", granger.str());
  WriteFile(config.output_dir / "timeseries_diagnostics.log", JoinLines(diag.messages));
  return errors;
}

int RunValidate(const RunConfig &config, const fs::path &annotations_path,
                const fs::path &gold_path) {
  RequirePath(annotations_path, "annotations");
  RequirePath(gold_path, "gold");
  const auto predicted = LoadAnnotations(annotations_path);
  const auto gold = ParseGold(ReadFile(gold_path));
  PrepareOutput(config);
  Diagnostics diag;
  WriteFile(config.output_dir / "metrics.csv", MetricsToCsv(ComputeBinaryMetrics(predicted, gold)));
  const double rho = OrderSpearman(predicted, gold, &diag);
  const FoundationMap map = ComputeFoundationMap(predicted, gold);
  std::ostringstream summary;
  summary << "metric,value\n"
          << "order_spearman," << Num(rho) << '\n'
          << "victim_map," << Num(map.victim_map) << '\n'
          << "officer_map," << Num(map.officer_map) << '\n'
          << "victim_ndcg," << Num(map.victim_ndcg) << '\n'
          << "officer_ndcg," << Num(map.officer_ndcg) << '\n'
          << "victim_docs," << map.victim_docs << '\n'
          << "officer_docs," << map.officer_docs << '\n';
  WriteFile(config.output_dir / "summary.csv", summary.str());
  WriteFile(config.output_dir / "validate_diagnostics.log", JoinLines(diag.messages));
  return 0;
}

std::string RunQuery(const EventCatalog &events) {
  std::string out;
  for (const auto &[id, event] : events) out += BuildSearchQuery(event) + '\n';
  return out;
}

int RunAudit(const RunConfig &config, const fs::path &annotations_path) {
  RequirePath(annotations_path, "annotations");
  const auto annotations = LoadAnnotations(annotations_path);
  const auto docs = LoadCorpus(config.corpus_dir);
  PrepareOutput(config);
  std::ostringstream out;
  out << "frame_a,frame_b,both_present,within_25,share\n";
  for (const auto &row : SpanOverlapAudit(docs, annotations)) {
    out << FrameName(row.a) << ',' << FrameName(row.b) << ',' << row.both_present << ','
        << row.within << ',' << Num(row.share) << '\n';
  }
  WriteFile(config.output_dir / "audit.csv", out.str());
  return 0;
}

}  // namespace framing
