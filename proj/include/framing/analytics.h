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

#ifndef FRAMING_ANALYTICS_H_
#define FRAMING_ANALYTICS_H_

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "framing/frames.h"
#include "framing/records.h"

namespace framing {

// Liberal = {left, extreme_left}; conservative = {right, extreme_right}.
enum class Group { kLiberal, kConservative };
std::optional<Group> GroupOf(SlantLabel label);

// One group per annotation (nullopt = neither pole), aligned by index.
using GroupAssignment = std::vector<std::optional<Group>>;
GroupAssignment AssignGroups(const std::vector<FrameAnnotation> &annotations,
                             const SlantCatalog &slants);

// Liberal (a) vs conservative (b) comparison of one quantity.
struct GroupComparison {
  std::string id;
  double liberal = 0;
  double conservative = 0;
  std::size_t n_liberal = 0;
  std::size_t n_conservative = 0;
  double u = 0;
  double p = 1;
  std::optional<double> cohens_d;  // conservative minus liberal
};

struct Diagnostics {
  std::vector<std::string> messages;
  void Add(std::string m) { messages.push_back(std::move(m)); }
};

// Share of each group's documents that include each frame. Throws
// UndefinedStatistic if either group is empty.
std::vector<GroupComparison> InclusionProportions(
    const std::vector<FrameAnnotation> &annotations,
    const GroupAssignment &groups);

// Inverse rank (1 / position among the document's present frames, by
// ascending offset, ties by frame order) of every present frame.
std::array<std::optional<double>, kNumFrames> InverseRanks(
    const FrameAnnotation &annotation);

// Mean inverse rank per frame over the documents where it is present.
// Frames absent from every document of a group are left out (diagnostic).
std::vector<GroupComparison> OrderingStats(
    const std::vector<FrameAnnotation> &annotations,
    const GroupAssignment &groups, Diagnostics *diagnostics = nullptr);

struct LeaningRegression {
  Frame frame = Frame::kAge;
  std::vector<std::pair<int, double>> points;  // (score, proportion)
  std::vector<std::size_t> bin_sizes;
  double slope = 0;
  double intercept = 0;
  double pearson_r = 0;
  double p_value = 1;
};

// One point per distinct slant score. Throws UndefinedStatistic with
// fewer than two bins. A constant response gives slope 0 and r 0.
LeaningRegression RegressOnLeaning(
    const std::vector<FrameAnnotation> &annotations,
    const SlantCatalog &slants, Frame frame);

enum class StyleNormalizer { kDocWords, kVictimTokens };

// Style categories, in reporting order.
enum class StyleCategory {
  kMust,
  kShould,
  kNeed,
  kHaveTo,
  kPassive,         // VICTIM-headed agentless passives
  kPassiveViolent,  // ... with a violent verb
  kAgentless,       // all agentless passives
  kAgentive
};
inline constexpr int kNumStyleCategories = 8;
std::string_view StyleCategoryName(StyleCategory c);
int StyleCount(const FrameAnnotation &a, StyleCategory c);

// Per-document count / denominator, compared across groups. Documents with
// a zero denominator are skipped (diagnostic). Cohen's d is left empty
// when it is undefined.
std::vector<GroupComparison> StyleFrequencies(
    const std::vector<FrameAnnotation> &annotations,
    const GroupAssignment &groups, StyleNormalizer normalizer,
    Diagnostics *diagnostics = nullptr);

// Share of documents with at least one hit per (entity, category).
std::vector<GroupComparison> MoralGroupProportions(
    const std::vector<FrameAnnotation> &annotations,
    const GroupAssignment &groups);

using EventPredicate = std::function<bool(const EventRecord &)>;

// InclusionProportions restricted to documents whose event satisfies
// `condition`. Throws UndefinedStatistic when nothing remains.
std::vector<GroupComparison> ConditionalInclusion(
    const std::vector<FrameAnnotation> &annotations,
    const EventCatalog &events, const GroupAssignment &groups,
    const EventPredicate &condition);

// Share of each group's documents whose event satisfies `condition`.
GroupComparison AgendaSetting(const std::vector<FrameAnnotation> &annotations,
                              const EventCatalog &events,
                              const GroupAssignment &groups,
                              const std::string &id,
                              const EventPredicate &condition);

// One conditional row: the frame compared under an event condition.
struct ConditionalRow {
  std::string label;  // e.g. "armed (T, black)"
  Frame frame;
  EventPredicate condition;
};
// The standard set of conditioned comparisons (ground truth true, optionally
// restricted to black or white victims).
std::vector<ConditionalRow> StandardConditionalRows();

// CSV writers. Columns: id,liberal,conservative,n_liberal,n_conservative,
// u,p,stars,cohens_d.
std::string ComparisonsToCsv(const std::vector<GroupComparison> &rows);
std::string LeaningToCsv(const std::vector<LeaningRegression> &rows);

}  // namespace framing

#endif  // FRAMING_ANALYTICS_H_
