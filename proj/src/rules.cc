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

// Extraction rules that depend on the VICTIM/OFFICER partition.

#include <algorithm>
#include <set>

#include "framing/frames.h"
#include "framing/text_util.h"

namespace framing {

namespace {

const std::set<std::string> kSpeechVerbs{"answer",  "claim",  "confirm",
                                         "declare", "explain", "reply",
                                         "report",  "say",    "state",
                                         "tell"};
const std::set<std::string> kOfficialLemmas{"authority", "investigator",
                                            "official", "source"};
const std::set<std::string> kPatientRelations{"nsubjpass", "nsubj:pass",
                                              "dobj", "iobj", "obj"};
const std::set<std::string> kShootingLemmas{"shoot", "kill", "murder"};

std::string Rel(const Token &t) { return ToLower(t.deprel); }

bool TermMatches(const Token &t, const std::set<std::string> &terms) {
  return terms.count(t.lemma) > 0 || terms.count(ToLower(t.surface)) > 0;
}

void Collect(const DependencyGraph &graph, TokenRef verb,
             const std::set<std::string> &object_deprels,
             std::set<TokenRef> &visited,
             std::vector<std::pair<TokenRef, TokenRef>> &out) {
  if (!visited.insert(verb).second) return;
  const ParsedDocument &doc = graph.doc();
  for (int c : graph.children(verb)) {
    TokenRef child{verb.sentence, c};
    const std::string rel = Rel(doc.at(child));
    if (object_deprels.count(rel)) {
      out.emplace_back(verb, child);
    } else if (rel == "prep") {
      for (int g : graph.children(child)) {
        if (Rel(doc.at({verb.sentence, g})) == "pobj") {
          out.emplace_back(verb, TokenRef{verb.sentence, g});
          break;
        }
      }
    } else if (rel == "conj" || rel == "xcomp") {
      Collect(graph, child, object_deprels, visited, out);
    }
  }
}

}  // namespace

FrameOffset ExtractRace(const ParsedDocument &doc,
                        const EntityPartition &partition,
                        const EventRecord &event, const RaceTerms &race_terms) {
  if (event.race == Race::kUnknown) return std::nullopt;
  auto it = race_terms.find(event.race);
  if (it == race_terms.end() || it->second.empty()) return std::nullopt;
  const std::set<std::string> &terms = it->second;
  DependencyGraph graph(doc);
  for (TokenRef t : partition.victim) {
    // A race word is not its own evidence: "black" in "a black car" is a
    // VICTIM seed but describes the car.
    if (TermMatches(doc.at(t), terms)) continue;
    TokenRef head = graph.head(t);
    for (int c : graph.children(head)) {
      if (TermMatches(doc.at({head.sentence, c}), terms)) {
        return doc.at(t).char_offset;
      }
    }
  }
  return std::nullopt;
}

std::vector<std::pair<TokenRef, TokenRef>> VerbsWithObjects(
    const DependencyGraph &graph, TokenRef verb,
    const std::set<std::string> &object_deprels) {
  std::vector<std::pair<TokenRef, TokenRef>> out;
  std::set<TokenRef> visited;
  Collect(graph, verb, object_deprels, visited, out);
  return out;
}

FrameOffset ExtractAttack(const ParsedDocument &doc,
                          const EntityPartition &partition,
                          const std::vector<std::string> &weapon_terms,
                          const AttackConfig &config) {
  const std::set<std::string> weapons(weapon_terms.begin(), weapon_terms.end());
  DependencyGraph graph(doc);
  for (TokenRef t : doc.tokens()) {
    const Token &subject = doc.at(t);
    if (Rel(subject) != "nsubj" || subject.is_root()) continue;
    const bool victim_subject = partition.is_victim(t);
    if (config.strict && !victim_subject) continue;
    for (const auto &[verb, object] :
         VerbsWithObjects(graph, graph.head(t), config.object_deprels)) {
      const Token &v = doc.at(verb);
      const bool officer_object = partition.is_officer(object);
      if (config.attack_verbs.count(v.lemma) &&
          (victim_subject || officer_object || TermMatches(doc.at(object), weapons))) {
        return v.char_offset;
      }
      if (config.advance_verbs.count(v.lemma) && officer_object) {
        return v.char_offset;
      }
    }
  }
  return std::nullopt;
}

SourceOffsets ExtractSources(const ParsedDocument &doc,
                             const EntityPartition &partition) {
  DependencyGraph graph(doc);
  std::vector<TokenRef> sources;
  for (TokenRef ref : doc.tokens()) {
    const Token &t = doc.at(ref);
    const std::string rel = Rel(t);
    // <SOURCE> <VERB> <CLAUSE>
    if ((rel == "nsubj" || rel == "nsubjpass" || rel == "nsubj:pass") &&
        !t.is_root() && kSpeechVerbs.count(doc.at(graph.head(ref)).lemma) &&
        (t.ent_type == "PERSON" || t.upos == "PRON" || partition.is_officer(ref) ||
         kOfficialLemmas.count(t.lemma))) {
      sources.push_back(ref);
    }
    // according (prep) -> to (pobj) -> <SOURCE>
    if (ToLower(t.surface) == "according") {
      for (int p : graph.children(ref)) {
        TokenRef prep{ref.sentence, p};
        if (Rel(doc.at(prep)) != "prep") continue;
        for (int o : graph.children(prep)) {
          TokenRef obj{ref.sentence, o};
          if (Rel(doc.at(obj)) == "pobj") sources.push_back(obj);
        }
      }
    }
  }
  SourceOffsets out;
  auto keep_min = [](FrameOffset &slot, int offset) {
    if (!slot || offset < *slot) slot = offset;
  };
  for (TokenRef s : sources) {
    const Token &t = doc.at(s);
    if (partition.is_officer(s) || kOfficialLemmas.count(t.lemma)) {
      keep_min(out.official, t.char_offset);
    } else if (!partition.is_victim(s)) {
      keep_min(out.unofficial, t.char_offset);
    }
  }
  return out;
}

bool HasVictimSubject(const DependencyGraph &graph,
                      const EntityPartition &partition, TokenRef object) {
  TokenRef head = graph.head(object);
  for (int c : graph.children(head)) {
    TokenRef child{head.sentence, c};
    if (partition.is_victim(child) && Rel(graph.doc().at(child)) == "nsubj") {
      return true;
    }
  }
  return false;
}

FrameOffset ExtractSystemicIncident(const ParsedDocument &doc,
                                    const EntityPartition &partition) {
  DependencyGraph graph(doc);
  for (TokenRef ref : doc.tokens()) {
    const Token &t = doc.at(ref);
    if (t.is_root() || !kPatientRelations.count(Rel(t))) continue;
    const Token &head = doc.at(graph.head(ref));
    if (kShootingLemmas.count(head.lemma) && !partition.is_victim(ref) &&
        !partition.is_officer(ref) && t.ent_type == "PERSON" &&
        !HasVictimSubject(graph, partition, ref)) {
      return head.char_offset;
    }
  }
  return std::nullopt;
}

}  // namespace framing
