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

#include "framing/partition.h"

#include <regex>

#include "framing/frames.h"
#include "framing/text_util.h"

namespace framing {

const std::vector<std::string> &GenderTerms(Gender gender) {
  static const std::vector<std::string> kFemale{"woman",  "girl",   "daughter",
                                                "mother", "sister", "female"};
  static const std::vector<std::string> kMale{"man",    "boy",     "son",
                                              "father", "brother", "male"};
  static const std::vector<std::string> kNone;
  switch (gender) {
    case Gender::kFemale:
      return kFemale;
    case Gender::kMale:
      return kMale;
    default:
      return kNone;
  }
}

VictimMatcher BuildVictimMatcher(const EventRecord &event,
                                 const RaceTerms &race_terms) {
  VictimMatcher m;
  for (std::string_view part : Split(event.victim_full_name, ' ')) {
    part = Trim(part);
    if (!part.empty()) m.terms.insert(ToLower(part));
  }
  for (const auto &term : GenderTerms(event.gender)) m.terms.insert(term);
  if (event.race != Race::kUnknown) {
    if (auto it = race_terms.find(event.race); it != race_terms.end()) {
      m.terms.insert(it->second.begin(), it->second.end());
    }
  }
  return m;
}

bool MatchOfficer(std::string_view surface) {
  static const std::regex kPattern(patterns::kOfficer,
                                   std::regex::ECMAScript | std::regex::icase);
  static const std::regex kCased(patterns::kOfficerCased, std::regex::ECMAScript);
  return std::regex_search(surface.begin(), surface.end(), kPattern) ||
         std::regex_search(surface.begin(), surface.end(), kCased);
}

bool IsHumanToken(const Token &token, const Lexicon &people_nouns) {
  return token.upos == "PROPN" || token.upos == "PRON" ||
         token.ent_type == "PERSON" || people_nouns.contains(token.lemma);
}

PartitionResult Propagate(const ParsedDocument &doc, const EntityPartition &seeds,
                          const Lexicon &people_nouns) {
  PartitionResult result{seeds, {}};
  for (const auto &[chain, spans] : doc.coref_chains) {
    bool has_victim = false, has_officer = false, human = false;
    std::vector<TokenRef> members;
    for (const Span &sp : spans) {
      for (int i = sp.begin; i < sp.end; ++i) {
        TokenRef t{sp.sentence, i};
        members.push_back(t);
        has_victim |= seeds.is_victim(t);
        has_officer |= seeds.is_officer(t);
        human |= IsHumanToken(doc.at(t), people_nouns);
      }
    }
    if (!human || (!has_victim && !has_officer)) continue;
    if (has_victim && has_officer) {
      result.warnings.push_back("document '" + doc.doc_id + "': chain '" +
                                chain +
                                "' reaches both VICTIM and OFFICER; assigned "
                                "to VICTIM");
    }
    for (TokenRef t : members) {
      if (has_victim) {
        if (!seeds.is_officer(t)) result.partition.victim.insert(t);
      } else if (!seeds.is_victim(t)) {
        result.partition.officer.insert(t);
      }
    }
  }
  return result;
}

PartitionResult Partition(const ParsedDocument &doc, const VictimMatcher &matcher,
                          const Lexicon &people_nouns) {
  EntityPartition seeds;
  for (TokenRef ref : doc.tokens()) {
    const Token &t = doc.at(ref);
    if (matcher.Matches(ToLower(t.surface))) {
      seeds.victim.insert(ref);
    } else if (MatchOfficer(t.surface)) {
      seeds.officer.insert(ref);
    }
  }
  return Propagate(doc, seeds, people_nouns);
}

}  // namespace framing
