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

#include "framing/annotation_io.h"

#include "json.hpp"

#include "framing/errors.h"
#include "framing/records.h"
#include "framing/text_util.h"

namespace framing {

namespace {

using Json = nlohmann::ordered_json;

int GetInt(const Json &j, const char *key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_number_integer()) {
    throw ValidationError(std::string("annotation field '") + key +
                          "' missing or not an integer");
  }
  return it->get<int>();
}

const Json &GetObject(const Json &j, const char *key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_object()) {
    throw ValidationError(std::string("annotation field '") + key +
                          "' missing or not an object");
  }
  return *it;
}

std::string GetString(const Json &j, const char *key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    throw ValidationError(std::string("annotation field '") + key +
                          "' missing or not a string");
  }
  return it->get<std::string>();
}

}  // namespace

std::string AnnotationToJson(const FrameAnnotation &a) {
  Json j;
  j["doc_id"] = a.doc_id;
  j["event_id"] = a.event_id;
  j["source_domain"] = a.source_domain;
  j["publish_date"] = a.publish_date.ToString();
  Json frames = Json::object();
  for (Frame f : AllFrames()) {
    const FrameOffset &o = a.offset(f);
    frames[std::string(FrameName(f))] = o ? Json(*o) : Json(nullptr);
  }
  j["frames"] = frames;
  Json modals = Json::object();
  for (int m = 0; m < kNumModals; ++m) {
    modals[std::string(ModalName(static_cast<Modal>(m)))] = a.modal_counts[m];
  }
  j["modals"] = modals;
  j["passives"] = {{"agentive", a.passive_counts.agentive},
                   {"agentless", a.passive_counts.agentless},
                   {"victim_agentless", a.passive_counts.victim_agentless},
                   {"victim_violent_agentless",
                    a.passive_counts.victim_violent_agentless}};
  Json mft = Json::object();
  for (int role = 0; role < 2; ++role) {
    Json cells = Json::object();
    for (int c = 0; c < kNumMoralCategories; ++c) {
      cells[std::string(MoralCategoryName(static_cast<MoralCategory>(c)))] =
          a.mft_scores[role][c];
    }
    mft[std::string(EntityRoleName(static_cast<EntityRole>(role)))] = cells;
  }
  j["mft"] = mft;
  j["victim_token_count"] = a.victim_token_count;
  j["doc_word_count"] = a.doc_word_count;
  return j.dump();
}

FrameAnnotation AnnotationFromJson(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error &e) {
    throw ParseError(std::string("invalid annotation JSON: ") + e.what());
  }
  FrameAnnotation a;
  a.doc_id = GetString(j, "doc_id");
  a.event_id = GetString(j, "event_id");
  a.source_domain = GetString(j, "source_domain");
  a.publish_date = Date::Parse(GetString(j, "publish_date"));
  const Json &frames = GetObject(j, "frames");
  for (Frame f : AllFrames()) {
    auto it = frames.find(std::string(FrameName(f)));
    if (it == frames.end()) {
      throw ValidationError("annotation missing frame '" +
                            std::string(FrameName(f)) + "'");
    }
    if (!it->is_null()) a.frame_offsets[static_cast<int>(f)] = it->get<int>();
  }
  const Json &modals = GetObject(j, "modals");
  for (int m = 0; m < kNumModals; ++m) {
    a.modal_counts[m] =
        GetInt(modals, std::string(ModalName(static_cast<Modal>(m))).c_str());
  }
  const Json &passives = GetObject(j, "passives");
  a.passive_counts.agentive = GetInt(passives, "agentive");
  a.passive_counts.agentless = GetInt(passives, "agentless");
  a.passive_counts.victim_agentless = GetInt(passives, "victim_agentless");
  a.passive_counts.victim_violent_agentless =
      GetInt(passives, "victim_violent_agentless");
  const Json &mft = GetObject(j, "mft");
  for (int role = 0; role < 2; ++role) {
    const Json &cells = GetObject(
        mft, std::string(EntityRoleName(static_cast<EntityRole>(role))).c_str());
    for (int c = 0; c < kNumMoralCategories; ++c) {
      a.mft_scores[role][c] = GetInt(
          cells, std::string(MoralCategoryName(static_cast<MoralCategory>(c))).c_str());
    }
  }
  a.victim_token_count = GetInt(j, "victim_token_count");
  a.doc_word_count = GetInt(j, "doc_word_count");
  return a;
}

std::string WriteAnnotations(const std::vector<FrameAnnotation> &annotations) {
  std::string out;
  for (const auto &a : annotations) {
    out += AnnotationToJson(a);
    out += '\n';
  }
  return out;
}

std::vector<FrameAnnotation> ParseAnnotations(std::string_view jsonl) {
  std::vector<FrameAnnotation> out;
  int line_no = 0;
  for (std::string_view line : Split(jsonl, '\n')) {
    ++line_no;
    if (Trim(line).empty()) continue;
    try {
      out.push_back(AnnotationFromJson(line));
    } catch (const Error &e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return out;
}

std::vector<FrameAnnotation> LoadAnnotations(const std::filesystem::path &path) {
  return ParseAnnotations(ReadFile(path));
}

}  // namespace framing
