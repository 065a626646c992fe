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

#include "framing/frames.h"

namespace framing {

FrameAnnotation Annotate(const ParsedDocument &doc, const EventRecord &event,
                         const EntityPartition &partition,
                         const Lexicons &lexicons, const AttackConfig &attack) {
  FrameAnnotation a;
  a.doc_id = doc.doc_id;
  a.event_id = doc.event_id;
  a.source_domain = doc.source_domain;
  a.publish_date = doc.publish_date;

  auto set = [&](Frame f, FrameOffset o) { a.frame_offsets[static_cast<int>(f)] = o; };
  const RegexFrames rx = ExtractRegexFrames(doc, event, lexicons);
  set(Frame::kAge, rx.age);
  set(Frame::kArmed, rx.armed);
  set(Frame::kCriminalRecord, rx.criminal_record);
  set(Frame::kFleeing, rx.fleeing);
  set(Frame::kGender, rx.gender);
  set(Frame::kLegalLanguage, rx.legal_language);
  set(Frame::kMentalIllness, rx.mental_illness);
  set(Frame::kUnarmed, rx.unarmed);
  set(Frame::kVideo, rx.video);
  set(Frame::kRace, ExtractRace(doc, partition, event, lexicons.race_terms));
  set(Frame::kAttack, ExtractAttack(doc, partition, event.weapon_terms, attack));
  const SourceOffsets sources = ExtractSources(doc, partition);
  set(Frame::kOfficialSources, sources.official);
  set(Frame::kUnofficialSources, sources.unofficial);
  set(Frame::kSystemic, ExtractSystemic(doc, partition));

  a.modal_counts = CountModals(doc);
  a.passive_counts = ExtractPassives(doc, partition);
  a.mft_scores = ScoreMoralFoundations(doc, partition, lexicons.moral);
  a.victim_token_count = static_cast<int>(partition.victim.size());
  a.doc_word_count = CountWords(doc);
  return a;
}

}  // namespace framing
