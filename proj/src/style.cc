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

#include <set>

#include "framing/frames.h"
#include "framing/text_util.h"

namespace framing {

namespace {

std::string Rel(const Token &t) { return ToLower(t.deprel); }

bool IsPassiveSubject(const Token &t) {
  const std::string rel = Rel(t);
  return rel == "nsubjpass" || rel == "nsubj:pass";
}

bool IsVerbal(const Token &t) { return t.upos == "VERB" || t.upos == "AUX"; }

// "have/has/had" followed by infinitival "to" + verb, or governing an xcomp
// verb marked by "to".
bool IsHaveTo(const ParsedDocument &doc, const DependencyGraph &graph,
              TokenRef ref) {
  const Token &t = doc.at(ref);
  if (t.lemma != "have") return false;
  const auto &sentence = doc.sentences[ref.sentence];
  const int i = ref.index;
  if (i + 2 < static_cast<int>(sentence.size()) &&
      ToLower(sentence[i + 1].surface) == "to" && IsVerbal(sentence[i + 2])) {
    return true;
  }
  for (int c : graph.children(ref)) {
    const Token &verb = sentence[c];
    if (Rel(verb) != "xcomp" || !IsVerbal(verb)) continue;
    for (int g : graph.children({ref.sentence, c})) {
      const Token &mark = sentence[g];
      if (ToLower(mark.surface) == "to" &&
          (Rel(mark) == "aux" || Rel(mark) == "mark")) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::string_view ModalName(Modal m) {
  static constexpr std::string_view kNames[] = {"MUST", "SHOULD", "NEED",
                                                "HAVE_TO"};
  return kNames[static_cast<int>(m)];
}

std::string_view EntityRoleName(EntityRole e) {
  return e == EntityRole::kVictim ? "victim" : "officer";
}

const std::set<std::string> &ViolentLemmas() {
  static const std::set<std::string> kViolent{
      "attack", "confront", "fire",  "harm",  "injure", "kill",
      "lunge",  "murder",   "shoot", "stab", "strike"};
  return kViolent;
}

PassiveCounts ExtractPassives(const ParsedDocument &doc,
                              const EntityPartition &partition,
                              const std::set<std::string> &violent_lemmas) {
  PassiveCounts counts;
  DependencyGraph graph(doc);
  for (TokenRef ref : doc.tokens()) {
    bool passive = false, victim_patient = false, agent = false;
    for (int c : graph.children(ref)) {
      TokenRef child{ref.sentence, c};
      const Token &t = doc.at(child);
      const std::string rel = Rel(t);
      if (IsPassiveSubject(t)) {
        passive = true;
        victim_patient |= partition.is_victim(child);
      } else if (rel == "agent" || rel == "obl:agent") {
        agent = true;
      } else if (rel == "prep" && ToLower(t.surface) == "by") {
        for (int g : graph.children(child)) {
          if (Rel(doc.at({ref.sentence, g})) == "pobj") agent = true;
        }
      }
    }
    if (!passive) continue;
    if (agent) {
      ++counts.agentive;
      continue;
    }
    ++counts.agentless;
    if (victim_patient) {
      ++counts.victim_agentless;
      if (violent_lemmas.count(doc.at(ref).lemma)) {
        ++counts.victim_violent_agentless;
      }
    }
  }
  return counts;
}

ModalCounts CountModals(const ParsedDocument &doc) {
  ModalCounts counts{};
  DependencyGraph graph(doc);
  for (TokenRef ref : doc.tokens()) {
    const Token &t = doc.at(ref);
    const std::string lower = ToLower(t.surface);
    if (lower == "must") {
      ++counts[static_cast<int>(Modal::kMust)];
    } else if (lower == "should" || lower == "shouldn't" || lower == "should've") {
      ++counts[static_cast<int>(Modal::kShould)];
    } else if (t.lemma == "need" && IsVerbal(t)) {
      ++counts[static_cast<int>(Modal::kNeed)];
    } else if (IsHaveTo(doc, graph, ref)) {
      ++counts[static_cast<int>(Modal::kHaveTo)];
    }
  }
  return counts;
}

MoralScores ScoreMoralFoundations(const ParsedDocument &doc,
                                  const EntityPartition &partition,
                                  const MoralDictionary &dictionary) {
  MoralScores scores{};
  DependencyGraph graph(doc);
  const std::set<TokenRef> *sets[2] = {&partition.victim, &partition.officer};
  for (int role = 0; role < 2; ++role) {
    // Descriptors: modifiers, predicate complements and agentive verbs.
    std::set<TokenRef> descriptors;
    for (TokenRef t : *sets[role]) {
      for (int c : graph.children(t)) {
        const std::string rel = Rel(doc.at({t.sentence, c}));
        if (rel == "amod" || rel == "appos") descriptors.insert({t.sentence, c});
      }
      const Token &tok = doc.at(t);
      if (tok.is_root()) continue;
      const std::string rel = Rel(tok);
      if (rel != "nsubj" && !IsPassiveSubject(tok)) continue;
      TokenRef head = graph.head(t);
      for (int c : graph.children(head)) {
        const std::string crel = Rel(doc.at({t.sentence, c}));
        if (crel == "acomp" || crel == "attr" || crel == "oprd") {
          descriptors.insert({t.sentence, c});
        }
      }
      if (rel == "nsubj") descriptors.insert(head);
    }
    for (TokenRef d : descriptors) {
      const Token &tok = doc.at(d);
      auto cats = dictionary.Lookup(tok.lemma);
      if (cats.empty()) cats = dictionary.Lookup(ToLower(tok.surface));
      for (MoralCategory c : cats) ++scores[role][static_cast<int>(c)];
    }
  }
  return scores;
}

int CountWords(const ParsedDocument &doc) {
  int n = 0;
  for (const auto &s : doc.sentences) {
    for (const Token &t : s) {
      if (t.upos != "PUNCT") ++n;
    }
  }
  return n;
}

}  // namespace framing
