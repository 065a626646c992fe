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

#ifndef FRAMING_DOCUMENT_H_
#define FRAMING_DOCUMENT_H_

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "framing/date.h"

namespace framing {

// One token of a dependency-parsed sentence. Ordinals are sentence-local
// and 0-based; the root token's head points at itself.
struct Token {
  int index = 0;
  int char_offset = 0;  // code point offset of the token start in the text
  std::string surface;
  std::string lemma;  // always lowercase
  std::string upos;
  std::string xpos;
  std::string feats;
  int head = 0;
  std::string deprel;
  std::string ent_type;
  std::string coref_chain;

  bool is_root() const { return head == index; }
  bool operator==(const Token &) const = default;
};

// Address of a token within a document.
struct TokenRef {
  int sentence = 0;
  int index = 0;
  auto operator<=>(const TokenRef &) const = default;
};

// Half-open token range [begin, end) inside one sentence.
struct Span {
  int sentence = 0;
  int begin = 0;
  int end = 0;
  auto operator<=>(const Span &) const = default;
};

struct ParsedDocument {
  std::string doc_id;
  std::string event_id;
  std::string source_domain;
  Date publish_date;
  std::string text;
  std::vector<std::vector<Token>> sentences;
  std::map<std::string, std::vector<Span>> coref_chains;

  const Token &at(TokenRef ref) const {
    return sentences[ref.sentence][ref.index];
  }
  std::size_t token_count() const;
  // All token refs in document order.
  std::vector<TokenRef> tokens() const;

  bool operator==(const ParsedDocument &) const = default;
};

// Child lists for every token, built once per document.
class DependencyGraph {
 public:
  explicit DependencyGraph(const ParsedDocument &doc);

  std::span<const int> children(TokenRef ref) const {
    return children_[ref.sentence][ref.index];
  }
  TokenRef head(TokenRef ref) const {
    return {ref.sentence, doc_->at(ref).head};
  }
  const ParsedDocument &doc() const { return *doc_; }

 private:
  const ParsedDocument *doc_;
  std::vector<std::vector<std::vector<int>>> children_;
};

}  // namespace framing

#endif  // FRAMING_DOCUMENT_H_
