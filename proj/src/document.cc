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

#include "framing/document.h"

namespace framing {

std::size_t ParsedDocument::token_count() const {
  std::size_t n = 0;
  for (const auto &s : sentences) n += s.size();
  return n;
}

std::vector<TokenRef> ParsedDocument::tokens() const {
  std::vector<TokenRef> out;
  out.reserve(token_count());
  for (int s = 0; s < static_cast<int>(sentences.size()); ++s) {
    for (int i = 0; i < static_cast<int>(sentences[s].size()); ++i) {
      out.push_back({s, i});
    }
  }
  return out;
}

DependencyGraph::DependencyGraph(const ParsedDocument &doc) : doc_(&doc) {
  children_.resize(doc.sentences.size());
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const auto &sentence = doc.sentences[s];
    children_[s].resize(sentence.size());
    for (const Token &t : sentence) {
      if (!t.is_root()) children_[s][t.head].push_back(t.index);
    }
  }
}

}  // namespace framing
