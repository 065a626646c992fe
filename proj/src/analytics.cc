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

#include "framing/analytics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "framing/errors.h"
#include "framing/stats.h"

namespace framing {

namespace {

struct Samples {
  std::vector<double> liberal;
  std::vector<double> conservative;

  void Add(Group g, double v) {
    (g == Group::kLiberal ? liberal : conservative).push_back(v);
  }
};

GroupComparison Compare(std::string id, const Samples &s) {
  if (s.liberal.empty() || s.conservative.empty()) {
    throw UndefinedStatistic("comparison '" + id + "' has an empty group");
  }
  GroupComparison c;
  c.id = std::move(id);
  c.liberal = Mean(s.liberal);
  c.conservative = Mean(s.conservative);
  c.n_liberal = s.liberal.size();
  c.n_conservative = s.conservative.size();
  const MannWhitneyResult mw = MannWhitneyU(s.liberal, s.conservative);
  c.u = mw.u;
  c.p = mw.p;
  try {
    c.cohens_d = CohensD(s.liberal, s.conservative);
  } catch (const UndefinedStatistic &) {
    c.cohens_d.reset();
  }
  return c;
}

void CheckAligned(const std::vector<FrameAnnotation> &annotations,
                  const GroupAssignment &groups) {
  if (annotations.size() != groups.size()) {
    throw ValidationError("group assignment does not match the annotations");
  }
}

std::string Num(double v) {
  if (std::isnan(v)) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::optional<Group> GroupOf(SlantLabel label) {
  switch (label) {
    case SlantLabel::kLeft:
    case SlantLabel::kExtremeLeft:
      return Group::kLiberal;
    case SlantLabel::kRight:
    case SlantLabel::kExtremeRight:
      return Group::kConservative;
    default:
      return std::nullopt;
  }
}

GroupAssignment AssignGroups(const std::vector<FrameAnnotation> &annotations,
                             const SlantCatalog &slants) {
  GroupAssignment out;
  out.reserve(annotations.size());
  for (const auto &a : annotations) {
    out.push_back(GroupOf(LookupSlant(slants, a.source_domain).label));
  }
  return out;
}

std::vector<GroupComparison> InclusionProportions(
    const std::vector<FrameAnnotation> &annotations,
    const GroupAssignment &groups) {
  CheckAligned(annotations, groups);
  std::vector<GroupComparison> out;
  for (Frame f : AllFrames()) {
    Samples s;
    for (std::size_t i = 0; i < annotations.size(); ++i) {
      if (groups[i]) s.Add(*groups[i], annotations[i].has(f) ? 1.0 : 0.0);
    }
    out.push_back(Compare(std::string(FrameName(f)), s));
  }
  return out;
}

std::array<std::optional<double>, kNumFrames> InverseRanks(
    const FrameAnnotation &annotation) {
  std::vector<std::pair<int, int>> present;  // (offset, frame index)
  for (int f = 0; f < kNumFrames; ++f) {
    if (annotation.frame_offsets[f]) present.emplace_back(*annotation.frame_offsets[f], f);
  }
  std::sort(present.begin(), present.end());
  std::array<std::optional<double>, kNumFrames> out{};
  for (std::size_t r = 0; r < present.size(); ++r) {
    out[present[r].second] = 1.0 / static_cast<double>(r + 1);
  }
  return out;
}

std::vector<GroupComparison> OrderingStats(
    const std::vector<FrameAnnotation> &annotations,
    const GroupAssignment &groups, Diagnostics *diagnostics) {
  CheckAligned(annotations, groups);
  std::array<Samples, kNumFrames> samples;
  for (std::size_t i = 0; i < annotations.size(); ++i) {
    if (!groups[i]) continue;
    const auto ranks = InverseRanks(annotations[i]);
    for (int f = 0; f < kNumFrames; ++f) {
      if (ranks[f]) samples[f].Add(*groups[i], *ranks[f]);
    }
  }
  std::vector<GroupComparison> out;
  for (Frame f : AllFrames()) {
    const Samples &s = samples[static_cast<int>(f)];
    if (s.liberal.empty() || s.conservative.empty()) {
      if (diagnostics) {
        diagnostics->Add("ordering: frame '" + std::string(FrameName(f)) +
                         "' is absent from every document of a group; skipped");
      }
      continue;
    }
    out.push_back(Compare(std::string(FrameName(f)), s));
  }
  return out;
}

LeaningRegression RegressOnLeaning(
    const std::vector<FrameAnnotation> &annotations,
    const SlantCatalog &slants, Frame frame) {
  std::map<int, std::pair<std::size_t, std::size_t>> bins;  // score -> (n, hits)
  for (const auto &a : annotations) {
    const SlantRecord slant = LookupSlant(slants, a.source_domain);
    if (!slant.score) continue;
    auto &bin = bins[*slant.score];
    ++bin.first;
    if (a.has(frame)) ++bin.second;
  }
  if (bins.size() < 2) {
    throw UndefinedStatistic("leaning regression for '" +
                             std::string(FrameName(frame)) +
                             "' needs at least two score bins");
  }
  LeaningRegression r;
  r.frame = frame;
  std::vector<double> xs, ys;
  for (const auto &[score, bin] : bins) {
    const double p = static_cast<double>(bin.second) / static_cast<double>(bin.first);
    r.points.emplace_back(score, p);
    r.bin_sizes.push_back(bin.first);
    xs.push_back(score);
    ys.push_back(p);
  }
  const LineFit fit = FitLine(xs, ys);
  r.slope = fit.slope;
  r.intercept = fit.intercept;
  if (std::all_of(ys.begin(), ys.end(), [&](double y) { return y == ys[0]; })) {
    r.slope = 0;
    r.pearson_r = 0;
    r.p_value = 1;
  } else {
    r.pearson_r = PearsonR(xs, ys);
    r.p_value = PearsonPValue(r.pearson_r, xs.size());
  }
  return r;
}

std::string_view StyleCategoryName(StyleCategory c) {
  static constexpr std::string_view kNames[] = {
      "MUST",    "SHOULD",          "NEED",      "HAVE_TO",
      "PASSIVE", "PASSIVE_VIOLENT", "AGENTLESS", "AGENTIVE"};
  return kNames[static_cast<int>(c)];
}

int StyleCount(const FrameAnnotation &a, StyleCategory c) {
  switch (c) {
    case StyleCategory::kMust:
      return a.modal_counts[static_cast<int>(Modal::kMust)];
    case StyleCategory::kShould:
      return a.modal_counts[static_cast<int>(Modal::kShould)];
    case StyleCategory::kNeed:
      return a.modal_counts[static_cast<int>(Modal::kNeed)];
    case StyleCategory::kHaveTo:
      return a.modal_counts[static_cast<int>(Modal::kHaveTo)];
    case StyleCategory::kPassive:
      return a.passive_counts.victim_agentless;
    case StyleCategory::kPassiveViolent:
      return a.passive_counts.victim_violent_agentless;
    case StyleCategory::kAgentless:
      return a.passive_counts.agentless;
    case StyleCategory::kAgentive:
      return a.passive_counts.agentive;
  }
  return 0;
}

std::vector<GroupComparison> StyleFrequencies(
    const std::vector<FrameAnnotation> &annotations,
    const GroupAssignment &groups, StyleNormalizer normalizer,
    Diagnostics *diagnostics) {
  CheckAligned(annotations, groups);
  std::array<Samples, kNumStyleCategories> samples;
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < annotations.size(); ++i) {
    if (!groups[i]) continue;
    const FrameAnnotation &a = annotations[i];
    const int denom = normalizer == StyleNormalizer::kDocWords
                          ? a.doc_word_count
                          : a.victim_token_count;
    if (denom <= 0) {
      ++skipped;
      continue;
    }
    for (int c = 0; c < kNumStyleCategories; ++c) {
      samples[c].Add(*groups[i],
                     StyleCount(a, static_cast<StyleCategory>(c)) /
                         static_cast<double>(denom));
    }
  }
  if (skipped > 0 && diagnostics) {
    diagnostics->Add("style: skipped " + std::to_string(skipped) +
                     " document(s) with a zero " +
                     (normalizer == StyleNormalizer::kDocWords ? "word count"
                                                               : "victim token count"));
  }
  std::vector<GroupComparison> out;
  for (int c = 0; c < kNumStyleCategories; ++c) {
    out.push_back(Compare(std::string(StyleCategoryName(static_cast<StyleCategory>(c))),
                          samples[c]));
  }
  return out;
}

std::vector<GroupComparison> MoralGroupProportions(
    const std::vector<FrameAnnotation> &annotations,
    const GroupAssignment &groups) {
  CheckAligned(annotations, groups);
  std::vector<GroupComparison> out;
  for (int role = 0; role < 2; ++role) {
    for (int c = 0; c < kNumMoralCategories; ++c) {
      Samples s;
      for (std::size_t i = 0; i < annotations.size(); ++i) {
        if (groups[i]) s.Add(*groups[i], annotations[i].mft_scores[role][c] > 0 ? 1.0 : 0.0);
      }
      out.push_back(Compare(
          std::string(EntityRoleName(static_cast<EntityRole>(role))) + ":" +
              std::string(MoralCategoryName(static_cast<MoralCategory>(c))),
          s));
    }
  }
  return out;
}

std::vector<GroupComparison> ConditionalInclusion(
    const std::vector<FrameAnnotation> &annotations,
    const EventCatalog &events, const GroupAssignment &groups,
    const EventPredicate &condition) {
  CheckAligned(annotations, groups);
  std::vector<FrameAnnotation> kept;
  GroupAssignment kept_groups;
  for (std::size_t i = 0; i < annotations.size(); ++i) {
    auto it = events.find(annotations[i].event_id);
    if (it == events.end() || !condition(it->second)) continue;
    kept.push_back(annotations[i]);
    kept_groups.push_back(groups[i]);
  }
  if (kept.empty()) {
    throw UndefinedStatistic("no documents satisfy the event condition");
  }
  return InclusionProportions(kept, kept_groups);
}

GroupComparison AgendaSetting(const std::vector<FrameAnnotation> &annotations,
                              const EventCatalog &events,
                              const GroupAssignment &groups, const std::string &id,
                              const EventPredicate &condition) {
  CheckAligned(annotations, groups);
  Samples s;
  for (std::size_t i = 0; i < annotations.size(); ++i) {
    if (!groups[i]) continue;
    auto it = events.find(annotations[i].event_id);
    if (it == events.end()) continue;
    s.Add(*groups[i], condition(it->second) ? 1.0 : 0.0);
  }
  return Compare(id, s);
}

std::vector<ConditionalRow> StandardConditionalRows() {
  struct Base {
    const char *name;
    Frame frame;
    EventPredicate truth;
  };
  const std::vector<Base> bases = {
      {"armed", Frame::kArmed,
       [](const EventRecord &e) { return e.armed_status == ArmedStatus::kArmed; }},
      {"attack", Frame::kAttack, [](const EventRecord &e) { return e.attack; }},
      {"fleeing", Frame::kFleeing, [](const EventRecord &e) { return e.fleeing; }},
      {"mental_illness", Frame::kMentalIllness,
       [](const EventRecord &e) { return e.mental_illness; }},
      {"unarmed", Frame::kUnarmed,
       [](const EventRecord &e) { return e.armed_status == ArmedStatus::kUnarmed; }},
      {"video", Frame::kVideo, [](const EventRecord &e) { return e.video; }},
  };
  std::vector<ConditionalRow> rows;
  for (const Base &b : bases) {
    rows.push_back({std::string(b.name) + " (T)", b.frame, b.truth});
    for (Race race : {Race::kBlack, Race::kWhite}) {
      EventPredicate truth = b.truth;
      rows.push_back({std::string(b.name) + " (T, " + std::string(RaceName(race)) + ")",
                      b.frame, [truth, race](const EventRecord &e) {
                        return truth(e) && e.race == race;
                      }});
    }
  }
  for (Race race : {Race::kBlack, Race::kWhite}) {
    rows.push_back({"race (" + std::string(RaceName(race)) + ")", Frame::kRace,
                    [race](const EventRecord &e) { return e.race == race; }});
  }
  return rows;
}

std::string ComparisonsToCsv(const std::vector<GroupComparison> &rows) {
  std::ostringstream out;
  out << "id,liberal,conservative,n_liberal,n_conservative,u,p,stars,cohens_d\n";
  for (const auto &r : rows) {
    out << r.id << ',' << Num(r.liberal) << ',' << Num(r.conservative) << ','
        << r.n_liberal << ',' << r.n_conservative << ',' << Num(r.u) << ','
        << Num(r.p) << ',' << SignificanceStars(r.p) << ','
        << (r.cohens_d ? Num(*r.cohens_d) : "NA") << '\n';
  }
  return out.str();
}

std::string LeaningToCsv(const std::vector<LeaningRegression> &rows) {
  std::ostringstream out;
  out << "frame,score,n,proportion,slope,intercept,pearson_r,p\n";
  for (const auto &r : rows) {
    for (std::size_t i = 0; i < r.points.size(); ++i) {
      out << FrameName(r.frame) << ',' << r.points[i].first << ','
          << r.bin_sizes[i] << ',' << Num(r.points[i].second) << ','
          << Num(r.slope) << ',' << Num(r.intercept) << ',' << Num(r.pearson_r)
          << ',' << Num(r.p_value) << '\n';
    }
  }
  return out.str();
}

}  // namespace framing
