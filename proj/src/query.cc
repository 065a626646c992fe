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

#include "framing/query.h"

#include <algorithm>
#include <sstream>
#include <vector>

#include "framing/errors.h"
#include "framing/text_util.h"

namespace framing {

namespace {

constexpr const char *kShootingTerms =
    "(shooting OR shot OR killed OR died OR fight OR gun)";
constexpr const char *kOfficerTerms =
    "(police OR officer OR officers OR law OR enforcement OR cop OR cops OR "
    "sheriff OR patrol)";

// Parentheses and quotes would break the group structure of the query.
std::string CleanName(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (c == '(' || c == ')' || c == '"') continue;
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string BuildSearchQuery(const EventRecord &event) {
  std::string cleaned = CleanName(event.victim_full_name);
  std::vector<std::string> words;
  for (std::string_view w : Split(cleaned, ' ')) {
    w = Trim(w);
    if (!w.empty()) words.emplace_back(w);
  }
  if (words.empty()) throw ValidationError("victim_full_name is empty");
  if (!event.date) {
    throw ValidationError("event '" + event.event_id +
                          "' has no date; the search window is undefined");
  }
  std::string full;
  for (const auto &w : words) {
    if (!full.empty()) full += ' ';
    full += w;
  }

  std::vector<std::string> names;
  for (const std::string &part : {full, words.front(), words.back()}) {
    if (std::find(names.begin(), names.end(), part) == names.end()) {
      names.push_back(part);
    }
  }
  std::ostringstream q;
  q << '(';
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) q << " OR ";
    if (names[i].find(' ') != std::string::npos) {
      q << '"' << names[i] << '"';
    } else {
      q << names[i];
    }
  }
  q << ") AND " << kShootingTerms << " AND " << kOfficerTerms
    << " after:" << event.date->AddDays(-1).ToString()
    << " before:" << event.date->AddDays(30).ToString();
  return q.str();
}

}  // namespace framing
