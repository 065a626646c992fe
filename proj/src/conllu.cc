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

#include "framing/conllu.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <optional>
#include <sstream>

#include "framing/errors.h"
#include "framing/text_util.h"
#include "framing/utf8.h"

namespace framing {

namespace {

constexpr std::array<std::string_view, 63> kDeprels = {
    // Universal Dependencies v2.
    "acl", "advcl", "advmod", "amod", "appos", "aux", "case", "cc", "ccomp",
    "clf", "compound", "conj", "cop", "csubj", "dep", "det", "discourse",
    "dislocated", "expl", "fixed", "flat", "goeswith", "iobj", "list", "mark",
    "nmod", "nsubj", "nummod", "obj", "obl", "orphan", "parataxis", "punct",
    "reparandum", "root", "vocative", "xcomp",
    // ClearNLP relations used by the extraction rules.
    "nsubjpass", "dobj", "pobj", "agent", "prep", "acomp", "attr", "auxpass",
    "csubjpass", "dative", "intj", "neg", "npadvmod", "oprd", "pcomp", "poss",
    "preconj", "predet", "prt", "quantmod", "relcl", "nn", "npmod", "meta",
    "nounmod"};

struct PendingDoc {
  ParsedDocument doc;
  bool has_event = false, has_domain = false, has_date = false, has_text = false;
  int first_line = 0;
};

std::optional<int> ToInt(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string Field(std::string_view s) {
  return s == "_" ? std::string() : std::string(s);
}

void BuildCorefChains(ParsedDocument *doc) {
  doc->coref_chains.clear();
  for (int s = 0; s < static_cast<int>(doc->sentences.size()); ++s) {
    const auto &sentence = doc->sentences[s];
    int i = 0;
    const int n = static_cast<int>(sentence.size());
    while (i < n) {
      const std::string &chain = sentence[i].coref_chain;
      if (chain.empty()) {
        ++i;
        continue;
      }
      int j = i + 1;
      while (j < n && sentence[j].coref_chain == chain) ++j;
      doc->coref_chains[chain].push_back({s, i, j});
      i = j;
    }
  }
}

class Reader {
 public:
  std::vector<ParsedDocument> Read(std::string_view input) {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= input.size()) {
      std::size_t end = input.find('\n', pos);
      if (end == std::string_view::npos) end = input.size();
      std::string_view line = input.substr(pos, end - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no;
      HandleLine(line, line_no);
      if (end == input.size()) break;
      pos = end + 1;
    }
    EndSentence(line_no);
    Flush();
    return std::move(docs_);
  }

 private:
  void HandleLine(std::string_view line, int line_no) {
    if (line.empty()) {
      EndSentence(line_no);
      return;
    }
    if (line.front() == '#') {
      HandleComment(line, line_no);
      return;
    }
    HandleToken(line, line_no);
  }

  void HandleComment(std::string_view line, int line_no) {
    std::string_view body = line.substr(1);
    std::size_t eq = body.find('=');
    if (eq == std::string_view::npos) return;
    std::string key(Trim(body.substr(0, eq)));
    std::string_view value = body.substr(eq + 1);
    if (!value.empty() && value.front() == ' ') value.remove_prefix(1);
    if (key == "doc_id") {
      EndSentence(line_no);
      Flush();
      current_.emplace();
      current_->first_line = line_no;
      current_->doc.doc_id = std::string(Trim(value));
      return;
    }
    if (!current_) return;
    if (!sentence_.empty()) {
      // Headers after the first sentence are sentence comments; ignore.
      return;
    }
    if (key == "event_id") {
      current_->doc.event_id = std::string(Trim(value));
      current_->has_event = true;
    } else if (key == "source_domain") {
      current_->doc.source_domain = std::string(Trim(value));
      current_->has_domain = true;
    } else if (key == "publish_date") {
      try {
        current_->doc.publish_date = Date::Parse(Trim(value));
      } catch (const ParseError &e) {
        throw ParseError(e.what(), line_no);
      }
      current_->has_date = true;
    } else if (key == "text") {
      current_->doc.text = std::string(value);
      current_->has_text = true;
    }
  }

  void HandleToken(std::string_view line, int line_no) {
    std::vector<std::string_view> cols = Split(line, '\t');
    if (cols.size() != 10) {
      throw ParseError("expected 10 tab-separated columns, found " +
                           std::to_string(cols.size()),
                       line_no);
    }
    if (cols[0].find_first_of("-.") != std::string_view::npos) return;
    if (!current_) {
      throw SchemaError("line " + std::to_string(line_no) +
                        ": token before any '# doc_id' header");
    }
    auto id = ToInt(cols[0]);
    if (!id || *id != static_cast<int>(sentence_.size()) + 1) {
      throw ParseError("token id '" + std::string(cols[0]) + "' out of sequence",
                       line_no);
    }
    auto head = ToInt(cols[6]);
    if (!head || *head < 0) {
      throw ParseError("bad head '" + std::string(cols[6]) + "'", line_no);
    }
    Token t;
    t.index = *id - 1;
    t.surface = std::string(cols[1]);
    t.lemma = cols[2] == "_" ? ToLower(cols[1]) : ToLower(cols[2]);
    t.upos = Field(cols[3]);
    t.xpos = Field(cols[4]);
    t.feats = Field(cols[5]);
    t.head = *head == 0 ? t.index : *head - 1;
    t.deprel = std::string(cols[7]);
    bool has_offset = false;
    if (cols[9] != "_") {
      for (std::string_view item : Split(cols[9], '|')) {
        std::size_t eq = item.find('=');
        if (eq == std::string_view::npos) continue;
        std::string_view key = item.substr(0, eq);
        std::string_view value = item.substr(eq + 1);
        if (key == "CharOffset") {
          auto off = ToInt(value);
          if (!off || *off < 0) {
            throw ParseError("bad CharOffset '" + std::string(value) + "'",
                             line_no);
          }
          t.char_offset = *off;
          has_offset = true;
        } else if (key == "Ent") {
          t.ent_type = std::string(value);
        } else if (key == "Coref") {
          t.coref_chain = std::string(value);
        }
      }
    }
    if (!has_offset) throw ParseError("missing CharOffset in MISC", line_no);
    if (*head > 0 && t.head == t.index) {
      throw StructuralError("line " + std::to_string(line_no) +
                            ": token is its own head");
    }
    sentence_.push_back(std::move(t));
    sentence_lines_.push_back(line_no);
  }

  void EndSentence(int) {
    if (sentence_.empty()) return;
    for (std::size_t i = 0; i < sentence_.size(); ++i) {
      if (sentence_[i].head >= static_cast<int>(sentence_.size())) {
        throw StructuralError("line " + std::to_string(sentence_lines_[i]) +
                              ": head index out of sentence");
      }
    }
    current_->doc.sentences.push_back(std::move(sentence_));
    sentence_.clear();
    sentence_lines_.clear();
  }

  void Flush() {
    if (!current_) return;
    PendingDoc &p = *current_;
    auto missing = [&](const char *name) {
      throw SchemaError("document starting at line " +
                        std::to_string(p.first_line) +
                        ": missing required header '" + name + "'");
    };
    if (p.doc.doc_id.empty()) missing("doc_id");
    if (!p.has_event) missing("event_id");
    if (!p.has_domain) missing("source_domain");
    if (!p.has_date) missing("publish_date");
    if (!p.has_text) missing("text");
    BuildCorefChains(&p.doc);
    ValidateDocument(p.doc);
    docs_.push_back(std::move(p.doc));
    current_.reset();
  }

  std::vector<ParsedDocument> docs_;
  std::optional<PendingDoc> current_;
  std::vector<Token> sentence_;
  std::vector<int> sentence_lines_;
};

}  // namespace

bool IsKnownDeprel(std::string_view deprel) {
  std::string base = ToLower(deprel.substr(0, deprel.find(':')));
  return std::find(kDeprels.begin(), kDeprels.end(), base) != kDeprels.end();
}

void ValidateDocument(const ParsedDocument &doc) {
  auto fail = [&](const std::string &m) {
    throw StructuralError("document '" + doc.doc_id + "': " + m);
  };
  if (doc.text.find('\n') != std::string::npos) fail("text contains a newline");
  Utf8Index index(doc.text);
  const std::size_t length = index.char_length();
  int previous = -1;
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const auto &sentence = doc.sentences[s];
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      const Token &t = sentence[i];
      const std::string where = "sentence " + std::to_string(s + 1) +
                                ", token " + std::to_string(i + 1);
      if (t.index != static_cast<int>(i)) fail(where + ": index mismatch");
      if (t.head < 0 || t.head >= static_cast<int>(sentence.size())) {
        fail(where + ": head index out of sentence");
      }
      if (!IsKnownDeprel(t.deprel)) {
        fail(where + ": unknown dependency relation '" + t.deprel + "'");
      }
      if (t.char_offset <= previous) {
        fail(where + ": character offsets must strictly increase");
      }
      previous = t.char_offset;
      const std::size_t surface_len = Utf8Length(t.surface);
      if (t.char_offset + surface_len > length) {
        fail(where + ": token extends past the end of the text");
      }
      std::size_t byte = index.ByteFromChar(t.char_offset);
      if (doc.text.compare(byte, t.surface.size(), t.surface) != 0) {
        fail(where + ": surface '" + t.surface +
             "' does not occur at its character offset");
      }
    }
  }
  for (const auto &[chain, spans] : doc.coref_chains) {
    for (const Span &sp : spans) {
      if (sp.sentence < 0 || sp.sentence >= static_cast<int>(doc.sentences.size()) ||
          sp.begin < 0 || sp.begin >= sp.end ||
          sp.end > static_cast<int>(doc.sentences[sp.sentence].size())) {
        fail("coreference span of chain '" + chain + "' is not inside one sentence");
      }
    }
  }
}

std::vector<ParsedDocument> ParseConllu(std::string_view input) {
  return Reader().Read(input);
}

ParsedDocument ParseDocument(std::string_view input) {
  auto docs = ParseConllu(input);
  if (docs.size() != 1) {
    throw SchemaError("expected exactly one document, found " +
                      std::to_string(docs.size()));
  }
  return std::move(docs.front());
}

std::string WriteConllu(const ParsedDocument &doc) {
  std::ostringstream out;
  out << "# doc_id = " << doc.doc_id << '\n'
      << "# event_id = " << doc.event_id << '\n'
      << "# source_domain = " << doc.source_domain << '\n'
      << "# publish_date = " << doc.publish_date.ToString() << '\n'
      << "# text = " << doc.text << '\n';
  auto field = [](const std::string &s) { return s.empty() ? "_" : s; };
  for (const auto &sentence : doc.sentences) {
    for (const Token &t : sentence) {
      out << t.index + 1 << '\t' << t.surface << '\t' << field(t.lemma) << '\t'
          << field(t.upos) << '\t' << field(t.xpos) << '\t' << field(t.feats)
          << '\t' << (t.is_root() ? 0 : t.head + 1) << '\t' << t.deprel
          << "\t_\t";
      if (!t.ent_type.empty()) out << "Ent=" << t.ent_type << '|';
      if (!t.coref_chain.empty()) out << "Coref=" << t.coref_chain << '|';
      out << "CharOffset=" << t.char_offset << '\n';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace framing
