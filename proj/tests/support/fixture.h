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

// Compact notation for hand-built parsed documents.
//
// A sentence is a space-separated token list. Each token is
//
//   [~]form[=lemma]/UPOS/head/deprel[#ENT][@chain]
//
// with 1-based heads (0 = root). A leading '~' joins the token to the
// previous one without a space. The lemma defaults to the lowercased form.
// Tokens sharing a chain id in one contiguous run form one coreference
// mention.

#ifndef FRAMING_TESTS_SUPPORT_FIXTURE_H_
#define FRAMING_TESTS_SUPPORT_FIXTURE_H_

#include <initializer_list>
#include <string>
#include <vector>

#include "framing/document.h"
#include "framing/records.h"

namespace framing::testing {

struct DocSpec {
  std::string doc_id = "doc";
  std::string event_id = "event";
  std::string source_domain = "example.com";
  std::string publish_date = "2017-05-01";
  std::vector<std::string> sentences;
};

// Renders the spec as extended CoNLL-U.
std::string BuildConllu(const DocSpec &spec);
// Renders and parses, so the result went through the real reader.
ParsedDocument BuildDoc(const DocSpec &spec);
ParsedDocument BuildDoc(std::vector<std::string> sentences);
ParsedDocument BuildDoc(std::initializer_list<std::string> sentences);

// First token (document order) with this surface; throws if absent.
TokenRef Find(const ParsedDocument &doc, const std::string &surface, int nth = 0);

}  // namespace framing::testing

#endif  // FRAMING_TESTS_SUPPORT_FIXTURE_H_
