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

#ifndef FRAMING_RECORDS_H_
#define FRAMING_RECORDS_H_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "framing/date.h"

namespace framing {

enum class Gender { kMale, kFemale, kUnknown };
enum class Race {
  kWhite,
  kBlack,
  kHispanic,
  kAsian,
  kNativeAmerican,
  kPacificIslander,
  kUnknown
};
enum class ArmedStatus { kArmed, kUnarmed, kUnknown };

std::string_view GenderName(Gender g);
std::string_view RaceName(Race r);
std::string_view ArmedStatusName(ArmedStatus a);
std::optional<Gender> ParseGender(std::string_view s);
std::optional<Race> ParseRace(std::string_view s);
std::optional<ArmedStatus> ParseArmedStatus(std::string_view s);

// Ground-truth metadata for one shooting event.
struct EventRecord {
  std::string event_id;
  std::string victim_full_name;
  std::optional<int> age;
  Gender gender = Gender::kUnknown;
  Race race = Race::kUnknown;
  ArmedStatus armed_status = ArmedStatus::kUnknown;
  std::vector<std::string> weapon_terms;
  bool fleeing = false;
  bool attack = false;
  bool mental_illness = false;
  bool video = false;
  std::optional<Date> date;
};

// First and last day of the events window.
inline const Date kCorpusStart{2013, 1, 1};
inline const Date kCorpusEnd{2020, 9, 4};

enum class SlantLabel {
  kExtremeLeft,
  kLeft,
  kLeftCenter,
  kLeastBiased,
  kRightCenter,
  kRight,
  kExtremeRight,
  kNone
};

std::string_view SlantLabelName(SlantLabel l);
std::optional<SlantLabel> ParseSlantLabel(std::string_view s);

struct SlantRecord {
  std::string domain;
  SlantLabel label = SlantLabel::kNone;
  std::optional<int> score;  // [-35, 35]
};

// Lowercase word list for one frame (or the people-noun list).
struct Lexicon {
  std::string name;
  std::set<std::string> entries;

  bool contains(std::string_view w) const {
    return entries.find(std::string(w)) != entries.end();
  }
};

// race -> lowercase descriptor terms.
using RaceTerms = std::map<Race, std::set<std::string>>;

// The ten moral foundation categories, in their canonical order.
enum class MoralCategory {
  kCareVirtue,
  kHarmVice,
  kFairnessVirtue,
  kCheatingVice,
  kLoyaltyVirtue,
  kBetrayalVice,
  kAuthorityVirtue,
  kSubversionVice,
  kPurityVirtue,
  kDegradationVice
};
inline constexpr int kNumMoralCategories = 10;

std::string_view MoralCategoryName(MoralCategory c);
std::optional<MoralCategory> ParseMoralCategory(std::string_view s);

// Moral foundations dictionary. Entries ending in '*' match by prefix.
class MoralDictionary {
 public:
  void Add(std::string word, MoralCategory category);
  // Categories for a word; empty if none. Looks up exact entries first,
  // then the longest matching prefix entry.
  std::vector<MoralCategory> Lookup(std::string_view word) const;
  std::size_t size() const { return exact_.size() + prefix_.size(); }

 private:
  std::map<std::string, std::vector<MoralCategory>, std::less<>> exact_;
  std::map<std::string, std::vector<MoralCategory>, std::less<>> prefix_;
};

struct ProtestCount {
  Date date;
  double count = 0;
};

using EventCatalog = std::map<std::string, EventRecord>;
using SlantCatalog = std::map<std::string, SlantRecord>;

// Parsers over in-memory content; the Load* variants read a file first.
// All throw ParseError / ValidationError / ConflictError.
EventCatalog ParseEvents(std::string_view jsonl);
SlantCatalog ParseSlants(std::string_view tsv);
Lexicon ParseLexicon(std::string_view text, std::string name);
RaceTerms ParseRaceTerms(std::string_view tsv);
MoralDictionary ParseMoralDictionary(std::string_view tsv);
std::vector<ProtestCount> ParseProtestCounts(std::string_view csv);

EventCatalog LoadEvents(const std::filesystem::path &path);
SlantCatalog LoadSlants(const std::filesystem::path &path);
Lexicon LoadLexicon(const std::filesystem::path &path, std::string name);
RaceTerms LoadRaceTerms(const std::filesystem::path &path);
MoralDictionary LoadMoralDictionary(const std::filesystem::path &path);
std::vector<ProtestCount> LoadProtestCounts(const std::filesystem::path &path);

// Checks the EventRecord invariants. Throws ValidationError naming the field.
void ValidateEvent(const EventRecord &event);
void ValidateSlant(const SlantRecord &slant);

// Slant lookup; unknown domains map to label kNone.
SlantRecord LookupSlant(const SlantCatalog &slants, const std::string &domain);

std::string ReadFile(const std::filesystem::path &path);

}  // namespace framing

#endif  // FRAMING_RECORDS_H_
