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

#ifndef FRAMING_CONLLU_H_
#define FRAMING_CONLLU_H_

#include <string>
#include <string_view>
#include <vector>

#include "framing/document.h"

namespace framing {

// Reader and writer for the extended CoNLL-U layout used for corpora.
//
// Each document starts with comment headers
//
//   # doc_id = ...
//   # event_id = ...
//   # source_domain = ...
//   # publish_date = YYYY-MM-DD
//   # text = <full article text on one line>
//
// followed by sentences in the usual 10-column layout separated by blank
// lines. The MISC column carries `CharOffset=<n>` (required; code point
// offset into the document text), `Ent=<label>` and `Coref=<chain id>`.
// A new `# doc_id` header starts the next document. Multiword token lines
// ("3-4") and empty nodes ("3.1") are skipped.

// Parses every document in `input`. Throws ParseError, SchemaError or
// StructuralError.
std::vector<ParsedDocument> ParseConllu(std::string_view input);

// Parses exactly one document.
ParsedDocument ParseDocument(std::string_view input);

// Serializes a document back to the extended CoNLL-U layout.
std::string WriteConllu(const ParsedDocument &doc);

// Checks every ParsedDocument invariant. Throws StructuralError.
void ValidateDocument(const ParsedDocument &doc);

// True if `deprel` (or its base before ':') is in the accepted relation
// vocabulary: Universal Dependencies plus the ClearNLP labels the
// extraction rules refer to.
bool IsKnownDeprel(std::string_view deprel);

}  // namespace framing

#endif  // FRAMING_CONLLU_H_
