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

#ifndef FRAMING_PARTITION_H_
#define FRAMING_PARTITION_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "framing/document.h"
#include "framing/records.h"

namespace framing {

// Lowercase terms identifying the victim of one event: name tokens plus
// gender, kinship and race descriptors consistent with the metadata.
struct VictimMatcher {
  std::set<std::string> terms;

  bool Matches(std::string_view lowercase_surface) const {
    return terms.find(std::string(lowercase_surface)) != terms.end();
  }
};

VictimMatcher BuildVictimMatcher(const EventRecord &event,
                                 const RaceTerms &race_terms);

// Gendered nouns for a known gender; empty for kUnknown.
const std::vector<std::string> &GenderTerms(Gender gender);

// Generic officer pattern applied to a token surface.
bool MatchOfficer(std::string_view surface);

bool IsHumanToken(const Token &token, const Lexicon &people_nouns);

// Disjoint VICTIM and OFFICER token sets of one document.
struct EntityPartition {
  std::set<TokenRef> victim;
  std::set<TokenRef> officer;

  bool is_victim(TokenRef t) const { return victim.count(t) > 0; }
  bool is_officer(TokenRef t) const { return officer.count(t) > 0; }
  bool operator==(const EntityPartition &) const = default;
};

struct PartitionResult {
  EntityPartition partition;
  std::vector<std::string> warnings;
};

// Seeds both sets by direct matching, then propagates along coreference
// chains that contain a seed and at least one human token. A token seeded
// into both sets stays VICTIM; a chain reaching both sides goes to VICTIM
// (with a warning); coreference never moves a directly seeded token.
PartitionResult Partition(const ParsedDocument &doc,
                          const VictimMatcher &matcher,
                          const Lexicon &people_nouns);

// Coreference propagation step on its own, from arbitrary seed sets.
PartitionResult Propagate(const ParsedDocument &doc, const EntityPartition &seeds,
                          const Lexicon &people_nouns);

}  // namespace framing

#endif  // FRAMING_PARTITION_H_
