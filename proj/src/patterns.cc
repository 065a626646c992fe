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

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <regex>

#include "framing/frames.h"
#include "framing/text_util.h"
#include "framing/utf8.h"

namespace framing {

namespace patterns {

// Officer alternation; the all-caps entries live in kOfficerCased and are
// matched case-sensitively.
const char *const kOfficer =
    R"(police|officer|\blaw\b|\benforcement\b|\bcop(?:s)?\b|sheriff|)"
    R"(\bpatrol(?:s)?\b|\bforce(?:s)?\b|\btrooper(?:s)?\b|\bmarshal(?:s)?\b|)"
    R"(\bcaptain(?:s)?\b|\blieutenant(?:s)?\b|\bsergeant(?:s)?\b|)"
    R"(\bgestapo\b|\bdeput(?:y|ies)\b|\bmount(?:s)?\b|\btraffic\b|)"
    R"(\bconstabular(?:y|ies)\b|\bauthorit(?:y|ies)\b|\bpower(?:s)?\b|)"
    R"(\buniform(?:s)?\b|\bunit(?:s)?\b|\bdepartment(?:s)?\b|agenc(?:y|ies)\b|)"
    R"(\bbadge(?:s)?\b|\bchazzer(?:s)?\b|\bcobbler(?:s)?\b|\bfuzz\b|\bpig\b|)"
    R"(\bk-9\b|\bnarc\b|\bcoppa\b|\bfive-o\b|\b5-0\b|\b12\b|\btwelve\b)";
const char *const kOfficerCased = R"(\bPD\b|\bSWAT\b|\bFBI\b)";

const char *const kFleeing =
    R"((\bflee(:?ing)?\b|\bfled\b|\bspe(?:e)?d(?:ing)?(?:off|away|toward|)"
    R"(towards)|(took|take(:?n)?)off|desert|(?:get|getting|got|run|)"
    R"(running|ran)away|pursu(?:it|ed)))";

const char *const kVideo = R"((body(?: )?cam|dash(?: )?cam))";

const char *const kUnarmed = R"(unarm(?:ed|ing|s)?)";

const char *const kArmedToken = R"(^arm(ed|ing|s)?)";

const char *const kSystemicKeywords =
    R"((nation(?:[ -])?wide|wide(?:[ -])?spread|police violence|)"
    R"(police shootings|police killings|racism|racial|systemic|reform|)"
    R"(no(?:[ -])?knock))";

}  // namespace patterns

namespace {

constexpr std::array<std::string_view, kNumFrames> kFrameNames{
    "age",           "armed",          "attack",
    "criminal_record", "fleeing",      "gender",
    "legal_language", "mental_illness", "official_sources",
    "race",          "systemic",       "unarmed",
    "unofficial_sources", "video"};

// Compiled case-insensitive patterns, shared across threads.
const std::regex &Compiled(std::string_view pattern) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<std::regex>, std::less<>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(pattern);
  if (it == cache.end()) {
    it = cache
             .emplace(std::string(pattern),
                      std::make_unique<std::regex>(
                          std::string(pattern),
                          std::regex::ECMAScript | std::regex::icase))
             .first;
  }
  return *it->second;
}

FrameOffset Search(std::string_view text, const Utf8Index &index,
                   std::string_view pattern) {
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_search(text.begin(), text.end(), m, Compiled(pattern))) {
    return std::nullopt;
  }
  return static_cast<int>(index.CharFromByte(m.position(0)));
}

}  // namespace

std::string_view FrameName(Frame f) { return kFrameNames[static_cast<int>(f)]; }

std::optional<Frame> ParseFrame(std::string_view s) {
  for (int i = 0; i < kNumFrames; ++i) {
    if (kFrameNames[i] == s) return static_cast<Frame>(i);
  }
  return std::nullopt;
}

const std::array<Frame, kNumFrames> &AllFrames() {
  static const auto kAll = [] {
    std::array<Frame, kNumFrames> a{};
    for (int i = 0; i < kNumFrames; ++i) a[i] = static_cast<Frame>(i);
    return a;
  }();
  return kAll;
}

FrameOffset FirstMatch(std::string_view text, std::string_view pattern) {
  return Search(text, Utf8Index(text), pattern);
}

std::string LexiconPattern(const Lexicon &lexicon) {
  std::string out;
  for (const auto &entry : lexicon.entries) {
    if (!out.empty()) out += '|';
    out += "\\b" + RegexEscape(entry) + "\\b";
  }
  return out;
}

bool IsArmedToken(const Token &token) {
  if (token.upos == "NOUN") return false;
  return std::regex_search(token.surface, Compiled(patterns::kArmedToken));
}

RegexFrames ExtractRegexFrames(const ParsedDocument &doc,
                               const EventRecord &event,
                               const Lexicons &lexicons) {
  RegexFrames out;
  const std::string_view text = doc.text;
  const Utf8Index index(text);
  out.fleeing = Search(text, index, patterns::kFleeing);
  out.video = Search(text, index, patterns::kVideo);
  out.unarmed = Search(text, index, patterns::kUnarmed);
  if (event.age) {
    out.age = Search(text, index, "\\b" + std::to_string(*event.age) + "\\b");
  }
  const auto &gender_terms = GenderTerms(event.gender);
  if (!gender_terms.empty()) {
    std::string alternation;
    for (const auto &t : gender_terms) {
      if (!alternation.empty()) alternation += '|';
      alternation += t;
    }
    out.gender = Search(text, index, "\\b(" + alternation + ")\\b");
  }
  for (TokenRef ref : doc.tokens()) {
    if (IsArmedToken(doc.at(ref))) {
      out.armed = doc.at(ref).char_offset;
      break;
    }
  }
  auto lexicon_match = [&](const Lexicon &lex) -> FrameOffset {
    if (lex.entries.empty()) return std::nullopt;
    return Search(text, index, LexiconPattern(lex));
  };
  out.legal_language = lexicon_match(lexicons.legal_language);
  out.mental_illness = lexicon_match(lexicons.mental_illness);
  out.criminal_record = lexicon_match(lexicons.criminal_record);
  return out;
}

FrameOffset ExtractSystemic(const ParsedDocument &doc,
                            const EntityPartition &partition) {
  FrameOffset keyword = FirstMatch(doc.text, patterns::kSystemicKeywords);
  FrameOffset incident = ExtractSystemicIncident(doc, partition);
  if (!keyword) return incident;
  if (!incident) return keyword;
  return std::min(*keyword, *incident);
}

}  // namespace framing
