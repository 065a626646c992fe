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

#ifndef FRAMING_FRAMES_H_
#define FRAMING_FRAMES_H_

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "framing/document.h"
#include "framing/partition.h"
#include "framing/records.h"

namespace framing {

// The fourteen reported frames, in reporting (and tie-break) order.
enum class Frame {
  kAge,
  kArmed,
  kAttack,
  kCriminalRecord,
  kFleeing,
  kGender,
  kLegalLanguage,
  kMentalIllness,
  kOfficialSources,
  kRace,
  kSystemic,
  kUnarmed,
  kUnofficialSources,
  kVideo
};
inline constexpr int kNumFrames = 14;

std::string_view FrameName(Frame f);
std::optional<Frame> ParseFrame(std::string_view s);
const std::array<Frame, kNumFrames> &AllFrames();

enum class Modal { kMust, kShould, kNeed, kHaveTo };
inline constexpr int kNumModals = 4;
std::string_view ModalName(Modal m);

enum class EntityRole { kVictim, kOfficer };
std::string_view EntityRoleName(EntityRole e);

// First-match character offset of a frame; nullopt means absent (+inf).
using FrameOffset = std::optional<int>;
using FrameOffsets = std::array<FrameOffset, kNumFrames>;

struct PassiveCounts {
  int agentive = 0;
  int agentless = 0;
  int victim_agentless = 0;
  int victim_violent_agentless = 0;
  bool operator==(const PassiveCounts &) const = default;
};

using ModalCounts = std::array<int, kNumModals>;
using MoralScores =
    std::array<std::array<int, kNumMoralCategories>, 2>;  // [role][category]

struct FrameAnnotation {
  std::string doc_id;
  std::string event_id;
  std::string source_domain;
  Date publish_date;
  FrameOffsets frame_offsets{};
  ModalCounts modal_counts{};
  PassiveCounts passive_counts;
  MoralScores mft_scores{};
  int victim_token_count = 0;
  int doc_word_count = 0;

  const FrameOffset &offset(Frame f) const {
    return frame_offsets[static_cast<int>(f)];
  }
  bool has(Frame f) const { return offset(f).has_value(); }
  int mft(EntityRole role, MoralCategory c) const {
    return mft_scores[static_cast<int>(role)][static_cast<int>(c)];
  }
  bool operator==(const FrameAnnotation &) const = default;
};

// Static verb and relation sets used by the attack rule.
struct AttackConfig {
  std::set<std::string> attack_verbs{"attack", "confront", "fire",
                                     "harm",   "injure",   "lunge",
                                     "shoot",  "stab",     "strike"};
  std::set<std::string> advance_verbs{"accelerate", "advance", "drive"};
  std::set<std::string> object_deprels{"dobj", "iobj", "obj",
                                       "obl",  "advcl", "pobj"};
  // Additionally require the subject to be a VICTIM token.
  bool strict = false;
};

// Lemmas counted as violent in passive constructions.
const std::set<std::string> &ViolentLemmas();

// All lexical resources the extractors need.
struct Lexicons {
  Lexicon legal_language;
  Lexicon mental_illness;
  Lexicon criminal_record;
  Lexicon people_nouns;
  RaceTerms race_terms;
  MoralDictionary moral;
};

// --- Document-level patterns -------------------------------------------

// Pattern sources, exposed for conformance tests.
namespace patterns {
extern const char *const kOfficer;
extern const char *const kOfficerCased;
extern const char *const kFleeing;
extern const char *const kVideo;
extern const char *const kUnarmed;
extern const char *const kArmedToken;
extern const char *const kSystemicKeywords;
}  // namespace patterns

// Earliest character offset (code points) where `pattern` matches `text`,
// case-insensitively.
FrameOffset FirstMatch(std::string_view text, std::string_view pattern);

// `\bw1\b|\bw2\b|...` over the lexicon entries, with regex metacharacters
// escaped.
std::string LexiconPattern(const Lexicon &lexicon);

struct RegexFrames {
  FrameOffset fleeing;
  FrameOffset video;
  FrameOffset age;
  FrameOffset gender;
  FrameOffset unarmed;
  FrameOffset armed;
  FrameOffset legal_language;
  FrameOffset mental_illness;
  FrameOffset criminal_record;
};

RegexFrames ExtractRegexFrames(const ParsedDocument &doc,
                               const EventRecord &event,
                               const Lexicons &lexicons);

// Token-level armed rule: surface matches ^arm(ed|ing|s)? and is not NOUN.
bool IsArmedToken(const Token &token);

// --- Partition-dependent rules -----------------------------------------

FrameOffset ExtractRace(const ParsedDocument &doc,
                        const EntityPartition &partition,
                        const EventRecord &event, const RaceTerms &race_terms);

// (verb, object) pairs reachable from `verb` through object relations,
// prep->pobj hops and conj/xcomp recursion.
std::vector<std::pair<TokenRef, TokenRef>> VerbsWithObjects(
    const DependencyGraph &graph, TokenRef verb,
    const std::set<std::string> &object_deprels);

FrameOffset ExtractAttack(const ParsedDocument &doc,
                          const EntityPartition &partition,
                          const std::vector<std::string> &weapon_terms,
                          const AttackConfig &config = {});

struct SourceOffsets {
  FrameOffset official;
  FrameOffset unofficial;
};

SourceOffsets ExtractSources(const ParsedDocument &doc,
                             const EntityPartition &partition);

// True if a VICTIM token is the nsubj of `object`'s head.
bool HasVictimSubject(const DependencyGraph &graph,
                      const EntityPartition &partition, TokenRef object);

FrameOffset ExtractSystemicIncident(const ParsedDocument &doc,
                                    const EntityPartition &partition);
FrameOffset ExtractSystemic(const ParsedDocument &doc,
                            const EntityPartition &partition);

// --- Style and moral signals -------------------------------------------

PassiveCounts ExtractPassives(const ParsedDocument &doc,
                              const EntityPartition &partition,
                              const std::set<std::string> &violent_lemmas =
                                  ViolentLemmas());

ModalCounts CountModals(const ParsedDocument &doc);

MoralScores ScoreMoralFoundations(const ParsedDocument &doc,
                                  const EntityPartition &partition,
                                  const MoralDictionary &dictionary);

// Number of non-punctuation tokens.
int CountWords(const ParsedDocument &doc);

// Runs every extractor on one document.
FrameAnnotation Annotate(const ParsedDocument &doc, const EventRecord &event,
                         const EntityPartition &partition,
                         const Lexicons &lexicons,
                         const AttackConfig &attack = {});

}  // namespace framing

#endif  // FRAMING_FRAMES_H_
