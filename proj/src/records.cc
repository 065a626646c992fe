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

#include "framing/records.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "framing/errors.h"
#include "framing/text_util.h"

namespace framing {

namespace {

using nlohmann::json;

template <typename E, std::size_t N>
std::optional<E> Lookup(const std::array<std::pair<E, std::string_view>, N> &table,
                        std::string_view name) {
  for (const auto &[value, n] : table) {
    if (n == name) return value;
  }
  return std::nullopt;
}

template <typename E, std::size_t N>
std::string_view NameOf(const std::array<std::pair<E, std::string_view>, N> &table,
                        E value) {
  for (const auto &[v, n] : table) {
    if (v == value) return n;
  }
  return "?";
}

constexpr std::array<std::pair<Gender, std::string_view>, 3> kGenders{{
    {Gender::kMale, "male"},
    {Gender::kFemale, "female"},
    {Gender::kUnknown, "unknown"},
}};

constexpr std::array<std::pair<Race, std::string_view>, 7> kRaces{{
    {Race::kWhite, "white"},
    {Race::kBlack, "black"},
    {Race::kHispanic, "hispanic"},
    {Race::kAsian, "asian"},
    {Race::kNativeAmerican, "native_american"},
    {Race::kPacificIslander, "pacific_islander"},
    {Race::kUnknown, "unknown"},
}};

constexpr std::array<std::pair<ArmedStatus, std::string_view>, 3> kArmed{{
    {ArmedStatus::kArmed, "armed"},
    {ArmedStatus::kUnarmed, "unarmed"},
    {ArmedStatus::kUnknown, "unknown"},
}};

constexpr std::array<std::pair<SlantLabel, std::string_view>, 8> kSlants{{
    {SlantLabel::kExtremeLeft, "extreme_left"},
    {SlantLabel::kLeft, "left"},
    {SlantLabel::kLeftCenter, "left_center"},
    {SlantLabel::kLeastBiased, "least_biased"},
    {SlantLabel::kRightCenter, "right_center"},
    {SlantLabel::kRight, "right"},
    {SlantLabel::kExtremeRight, "extreme_right"},
    {SlantLabel::kNone, "none"},
}};

constexpr std::array<std::pair<MoralCategory, std::string_view>, 10> kMoral{{
    {MoralCategory::kCareVirtue, "care.virtue"},
    {MoralCategory::kHarmVice, "harm.vice"},
    {MoralCategory::kFairnessVirtue, "fairness.virtue"},
    {MoralCategory::kCheatingVice, "cheating.vice"},
    {MoralCategory::kLoyaltyVirtue, "loyalty.virtue"},
    {MoralCategory::kBetrayalVice, "betrayal.vice"},
    {MoralCategory::kAuthorityVirtue, "authority.virtue"},
    {MoralCategory::kSubversionVice, "subversion.vice"},
    {MoralCategory::kPurityVirtue, "purity.virtue"},
    {MoralCategory::kDegradationVice, "degradation.vice"},
}};

std::optional<int> ToInt(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Calls fn(line, line_no) for each non-blank, non-comment line.
template <typename Fn>
void ForEachLine(std::string_view text, Fn fn) {
  int line_no = 0;
  for (std::string_view line : Split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty() || line.front() == '#') continue;
    fn(line, line_no);
  }
}

const json &Require(const json &j, const char *field, int line_no) {
  auto it = j.find(field);
  if (it == j.end()) {
    throw ValidationError("events line " + std::to_string(line_no) +
                          ": missing field '" + field + "'");
  }
  return *it;
}

EventRecord EventFromJson(const json &j, int line_no) {
  auto bad = [&](const char *field, const std::string &why) {
    return ValidationError("events line " + std::to_string(line_no) +
                           ": field '" + field + "' " + why);
  };
  EventRecord e;
  try {
    e.event_id = Require(j, "event_id", line_no).get<std::string>();
    e.victim_full_name = Require(j, "victim_full_name", line_no).get<std::string>();
    const json &age = Require(j, "age", line_no);
    if (!age.is_null()) e.age = age.get<int>();
    auto gender = ParseGender(Require(j, "gender", line_no).get<std::string>());
    if (!gender) throw bad("gender", "has an unknown value");
    e.gender = *gender;
    auto race = ParseRace(Require(j, "race", line_no).get<std::string>());
    if (!race) throw bad("race", "has an unknown value");
    e.race = *race;
    auto armed = ParseArmedStatus(Require(j, "armed_status", line_no).get<std::string>());
    if (!armed) throw bad("armed_status", "has an unknown value");
    e.armed_status = *armed;
    e.weapon_terms = Require(j, "weapon_terms", line_no).get<std::vector<std::string>>();
    e.fleeing = Require(j, "fleeing", line_no).get<bool>();
    e.attack = Require(j, "attack", line_no).get<bool>();
    e.mental_illness = Require(j, "mental_illness", line_no).get<bool>();
    e.video = Require(j, "video", line_no).get<bool>();
    const json &date = Require(j, "date", line_no);
    if (!date.is_null()) e.date = Date::Parse(date.get<std::string>());
  } catch (const json::exception &ex) {
    throw ValidationError("events line " + std::to_string(line_no) +
                          ": wrong field type (" + ex.what() + ")");
  } catch (const ParseError &ex) {
    throw ValidationError("events line " + std::to_string(line_no) +
                          ": field 'date' " + ex.what());
  }
  try {
    ValidateEvent(e);
  } catch (const ValidationError &ex) {
    throw ValidationError("events line " + std::to_string(line_no) + ": " +
                          ex.what());
  }
  return e;
}

}  // namespace

std::string_view GenderName(Gender g) { return NameOf(kGenders, g); }
std::string_view RaceName(Race r) { return NameOf(kRaces, r); }
std::string_view ArmedStatusName(ArmedStatus a) { return NameOf(kArmed, a); }
std::string_view SlantLabelName(SlantLabel l) { return NameOf(kSlants, l); }
std::string_view MoralCategoryName(MoralCategory c) { return NameOf(kMoral, c); }
std::optional<Gender> ParseGender(std::string_view s) { return Lookup(kGenders, s); }
std::optional<Race> ParseRace(std::string_view s) { return Lookup(kRaces, s); }
std::optional<ArmedStatus> ParseArmedStatus(std::string_view s) {
  return Lookup(kArmed, s);
}
std::optional<SlantLabel> ParseSlantLabel(std::string_view s) {
  return Lookup(kSlants, s);
}
std::optional<MoralCategory> ParseMoralCategory(std::string_view s) {
  return Lookup(kMoral, s);
}

void MoralDictionary::Add(std::string word, MoralCategory category) {
  auto &table = !word.empty() && word.back() == '*' ? prefix_ : exact_;
  if (&table == &prefix_) word.pop_back();
  auto &cats = table[word];
  if (std::find(cats.begin(), cats.end(), category) == cats.end()) {
    cats.push_back(category);
    std::sort(cats.begin(), cats.end());
  }
}

std::vector<MoralCategory> MoralDictionary::Lookup(std::string_view word) const {
  if (auto it = exact_.find(word); it != exact_.end()) return it->second;
  for (std::size_t len = word.size(); len > 0; --len) {
    if (auto it = prefix_.find(word.substr(0, len)); it != prefix_.end()) {
      return it->second;
    }
  }
  return {};
}

void ValidateEvent(const EventRecord &e) {
  if (e.event_id.empty()) throw ValidationError("field 'event_id' is empty");
  if (Trim(e.victim_full_name).empty()) {
    throw ValidationError("field 'victim_full_name' is empty");
  }
  if (e.age && (*e.age < 0 || *e.age > 120)) {
    throw ValidationError("field 'age' out of range");
  }
  const bool armed = e.armed_status == ArmedStatus::kArmed;
  if (armed == e.weapon_terms.empty()) {
    throw ValidationError(
        "field 'weapon_terms' must be non-empty exactly when armed_status is "
        "armed");
  }
  for (const auto &w : e.weapon_terms) {
    if (w.empty() || HasUpper(w) || Trim(w) != w) {
      throw ValidationError("field 'weapon_terms' has a malformed entry '" + w + "'");
    }
  }
  if (e.date && (*e.date < kCorpusStart || *e.date > kCorpusEnd)) {
    throw ValidationError("field 'date' outside " + kCorpusStart.ToString() +
                          " .. " + kCorpusEnd.ToString());
  }
}

void ValidateSlant(const SlantRecord &s) {
  if (s.domain.empty()) throw ValidationError("field 'domain' is empty");
  if (!s.score) return;
  if (*s.score < -35 || *s.score > 35) {
    throw ValidationError("field 'score' outside [-35, 35]");
  }
  const bool left = s.label == SlantLabel::kExtremeLeft ||
                    s.label == SlantLabel::kLeft ||
                    s.label == SlantLabel::kLeftCenter;
  const bool right = s.label == SlantLabel::kExtremeRight ||
                     s.label == SlantLabel::kRight ||
                     s.label == SlantLabel::kRightCenter;
  if ((left && *s.score > 0) || (right && *s.score < 0)) {
    throw ValidationError("field 'score' sign disagrees with label '" +
                          std::string(SlantLabelName(s.label)) + "'");
  }
}

SlantRecord LookupSlant(const SlantCatalog &slants, const std::string &domain) {
  auto it = slants.find(domain);
  if (it != slants.end()) return it->second;
  return SlantRecord{domain, SlantLabel::kNone, std::nullopt};
}

EventCatalog ParseEvents(std::string_view jsonl) {
  EventCatalog out;
  ForEachLine(jsonl, [&](std::string_view line, int line_no) {
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error &ex) {
      throw ParseError(std::string("invalid JSON: ") + ex.what(), line_no);
    }
    if (!j.is_object()) throw ParseError("expected a JSON object", line_no);
    EventRecord e = EventFromJson(j, line_no);
    std::string id = e.event_id;
    if (!out.emplace(id, std::move(e)).second) {
      throw ConflictError("events line " + std::to_string(line_no) +
                          ": duplicate event_id '" + id + "'");
    }
  });
  return out;
}

SlantCatalog ParseSlants(std::string_view tsv) {
  SlantCatalog out;
  ForEachLine(tsv, [&](std::string_view line, int line_no) {
    auto cols = Split(line, '\t');
    if (cols.size() != 3) {
      throw ParseError("expected domain<TAB>label<TAB>score", line_no);
    }
    if (line_no == 1 && cols[0] == "domain" && cols[1] == "label") return;
    SlantRecord r;
    r.domain = std::string(Trim(cols[0]));
    auto label = ParseSlantLabel(Trim(cols[1]));
    if (!label) {
      throw ValidationError("slants line " + std::to_string(line_no) +
                            ": field 'label' has unknown value '" +
                            std::string(cols[1]) + "'");
    }
    r.label = *label;
    std::string_view score = Trim(cols[2]);
    if (!score.empty()) {
      r.score = ToInt(score);
      if (!r.score) {
        throw ValidationError("slants line " + std::to_string(line_no) +
                              ": field 'score' is not an integer");
      }
    }
    try {
      ValidateSlant(r);
    } catch (const ValidationError &ex) {
      throw ValidationError("slants line " + std::to_string(line_no) + ": " +
                            ex.what());
    }
    std::string domain = r.domain;
    if (!out.emplace(domain, std::move(r)).second) {
      throw ConflictError("slants line " + std::to_string(line_no) +
                          ": duplicate domain '" + domain + "'");
    }
  });
  return out;
}

Lexicon ParseLexicon(std::string_view text, std::string name) {
  Lexicon lex;
  lex.name = std::move(name);
  ForEachLine(text, [&](std::string_view line, int line_no) {
    if (HasUpper(line) || Trim(line) != line) {
      throw ValidationError("lexicon '" + lex.name + "' line " +
                            std::to_string(line_no) + ": entry '" +
                            std::string(line) +
                            "' must be lowercase without surrounding whitespace");
    }
    lex.entries.emplace(line);
  });
  if (lex.entries.empty()) {
    throw ValidationError("lexicon '" + lex.name + "' has no entries");
  }
  return lex;
}

RaceTerms ParseRaceTerms(std::string_view tsv) {
  RaceTerms out;
  ForEachLine(tsv, [&](std::string_view line, int line_no) {
    auto cols = Split(line, '\t');
    if (cols.size() != 2) {
      throw ParseError("expected race<TAB>terms", line_no);
    }
    auto race = ParseRace(Trim(cols[0]));
    if (!race || *race == Race::kUnknown) {
      throw ValidationError("race terms line " + std::to_string(line_no) +
                            ": unknown race '" + std::string(cols[0]) + "'");
    }
    if (out.count(*race)) {
      throw ConflictError("race terms line " + std::to_string(line_no) +
                          ": duplicate race");
    }
    auto &terms = out[*race];
    for (std::string_view term : Split(cols[1], ',')) {
      term = Trim(term);
      if (term.empty()) continue;
      if (HasUpper(term)) {
        throw ValidationError("race terms line " + std::to_string(line_no) +
                              ": term '" + std::string(term) + "' is not lowercase");
      }
      terms.emplace(term);
    }
    if (terms.empty()) {
      throw ValidationError("race terms line " + std::to_string(line_no) +
                            ": no terms");
    }
  });
  return out;
}

MoralDictionary ParseMoralDictionary(std::string_view tsv) {
  MoralDictionary dict;
  ForEachLine(tsv, [&](std::string_view line, int line_no) {
    auto cols = Split(line, '\t');
    if (cols.size() != 2) {
      throw ParseError("expected word<TAB>foundation.valence", line_no);
    }
    std::string_view word = Trim(cols[0]);
    auto cat = ParseMoralCategory(Trim(cols[1]));
    if (!cat) {
      throw ValidationError("moral dictionary line " + std::to_string(line_no) +
                            ": unknown category '" + std::string(cols[1]) + "'");
    }
    if (word.empty() || HasUpper(word)) {
      throw ValidationError("moral dictionary line " + std::to_string(line_no) +
                            ": word must be lowercase and non-empty");
    }
    dict.Add(std::string(word), *cat);
  });
  if (dict.size() == 0) throw ValidationError("moral dictionary is empty");
  return dict;
}

std::vector<ProtestCount> ParseProtestCounts(std::string_view csv) {
  std::vector<ProtestCount> out;
  ForEachLine(csv, [&](std::string_view line, int line_no) {
    auto cols = Split(line, ',');
    if (cols.size() != 2) throw ParseError("expected date,count", line_no);
    if (Trim(cols[0]) == "date") return;
    ProtestCount p;
    try {
      p.date = Date::Parse(Trim(cols[0]));
    } catch (const ParseError &ex) {
      throw ParseError(ex.what(), line_no);
    }
    std::string count(Trim(cols[1]));
    try {
      std::size_t used = 0;
      p.count = std::stod(count, &used);
      if (used != count.size()) throw std::invalid_argument(count);
    } catch (const std::exception &) {
      throw ParseError("bad count '" + count + "'", line_no);
    }
    if (p.count < 0) {
      throw ValidationError("protest counts line " + std::to_string(line_no) +
                            ": negative count");
    }
    out.push_back(p);
  });
  std::sort(out.begin(), out.end(),
            [](const ProtestCount &a, const ProtestCount &b) { return a.date < b.date; });
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].date == out[i - 1].date) {
      throw ConflictError("protest counts: duplicate date " +
                          out[i].date.ToString());
    }
  }
  return out;
}

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

EventCatalog LoadEvents(const std::filesystem::path &path) {
  return ParseEvents(ReadFile(path));
}
SlantCatalog LoadSlants(const std::filesystem::path &path) {
  return ParseSlants(ReadFile(path));
}
Lexicon LoadLexicon(const std::filesystem::path &path, std::string name) {
  return ParseLexicon(ReadFile(path), std::move(name));
}
RaceTerms LoadRaceTerms(const std::filesystem::path &path) {
  return ParseRaceTerms(ReadFile(path));
}
MoralDictionary LoadMoralDictionary(const std::filesystem::path &path) {
  return ParseMoralDictionary(ReadFile(path));
}
std::vector<ProtestCount> LoadProtestCounts(const std::filesystem::path &path) {
  return ParseProtestCounts(ReadFile(path));
}

}  // namespace framing
