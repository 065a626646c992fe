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

#include "fixture.h"

#include <sstream>
#include <stdexcept>

#include "framing/conllu.h"
#include "framing/text_util.h"
#include "framing/utf8.h"

namespace framing::testing {

namespace {

struct RawToken {
  bool glued = false;
  std::string form, lemma, upos, deprel, ent, chain;
  int head = 0;
};

RawToken ParseToken(std::string_view spec) {
  RawToken t;
  if (!spec.empty() && spec.front() == '~') {
    t.glued = true;
    spec.remove_prefix(1);
  }
  std::string s(spec);
  if (auto at = s.rfind('@'); at != std::string::npos && at > s.rfind('/')) {
    t.chain = s.substr(at + 1);
    s.erase(at);
  }
  if (auto hash = s.rfind('#'); hash != std::string::npos && hash > s.rfind('/')) {
    t.ent = s.substr(hash + 1);
    s.erase(hash);
  }
  const auto parts = Split(s, '/');
  if (parts.size() != 4) throw std::invalid_argument("bad fixture token: " + std::string(spec));
  std::string form(parts[0]);
  if (auto eq = form.find('='); eq != std::string::npos && eq > 0) {
    t.lemma = form.substr(eq + 1);
    form.erase(eq);
  } else {
    t.lemma = ToLower(form);
  }
  t.form = form;
  t.upos = std::string(parts[1]);
  t.head = std::stoi(std::string(parts[2]));
  t.deprel = std::string(parts[3]);
  return t;
}

}  // namespace

std::string BuildConllu(const DocSpec &spec) {
  std::vector<std::vector<RawToken>> sentences;
  for (const auto &line : spec.sentences) {
    std::vector<RawToken> tokens;
    std::istringstream in(line);
    std::string word;
    while (in >> word) tokens.push_back(ParseToken(word));
    sentences.push_back(std::move(tokens));
  }
  std::string text;
  std::vector<std::vector<int>> offsets;
  for (const auto &sentence : sentences) {
    offsets.emplace_back();
    for (const auto &t : sentence) {
      if (!text.empty() && !t.glued) text += ' ';
      offsets.back().push_back(static_cast<int>(Utf8Length(text)));
      text += t.form;
    }
  }
  std::ostringstream out;
  out << "# doc_id = " << spec.doc_id << '\n'
      << "# event_id = " << spec.event_id << '\n'
      << "# source_domain = " << spec.source_domain << '\n'
      << "# publish_date = " << spec.publish_date << '\n'
      << "# text = " << text << '\n';
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    for (std::size_t i = 0; i < sentences[s].size(); ++i) {
      const RawToken &t = sentences[s][i];
      std::string misc;
      if (!t.ent.empty()) misc += "Ent=" + t.ent + "|";
      if (!t.chain.empty()) misc += "Coref=" + t.chain + "|";
      misc += "CharOffset=" + std::to_string(offsets[s][i]);
      out << i + 1 << '\t' << t.form << '\t' << t.lemma << '\t' << t.upos
          << "\t_\t_\t" << t.head << '\t' << t.deprel << "\t_\t" << misc << '\n';
    }
    out << '\n';
  }
  return out.str();
}

ParsedDocument BuildDoc(const DocSpec &spec) { return ParseDocument(BuildConllu(spec)); }

ParsedDocument BuildDoc(std::vector<std::string> sentences) {
  DocSpec spec;
  spec.sentences = std::move(sentences);
  return BuildDoc(spec);
}

ParsedDocument BuildDoc(std::initializer_list<std::string> sentences) {
  return BuildDoc(std::vector<std::string>(sentences));
}

TokenRef Find(const ParsedDocument &doc, const std::string &surface, int nth) {
  for (TokenRef ref : doc.tokens()) {
    if (doc.at(ref).surface == surface && nth-- == 0) return ref;
  }
  throw std::invalid_argument("no token '" + surface + "'");
}

}  // namespace framing::testing
