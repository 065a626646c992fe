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

#include <filesystem>
#include <string>

#include "doctest.h"
#include "fixture.h"
#include "minicorpus.h"
#include "framing/conllu.h"
#include "framing/date.h"
#include "framing/errors.h"
#include "framing/query.h"
#include "framing/records.h"
#include "framing/utf8.h"

namespace fs = std::filesystem;
using namespace framing;

namespace {

const std::string kHeader =
    "# doc_id = d1\n"
    "# event_id = e1\n"
    "# source_domain = example.com\n"
    "# publish_date = 2017-05-01\n"
    "# text = Officers shot the man today.\n";

std::string Line(int id, const std::string &form, int head, const std::string &rel,
                 const std::string &misc) {
  return std::to_string(id) + "\t" + form + "\t" + form + "\tX\t_\t_\t" +
         std::to_string(head) + "\t" + rel + "\t_\t" + misc + "\n";
}

std::string FiveTokens(const std::string &coref = "") {
  return kHeader + Line(1, "Officers", 2, "nsubj", "CharOffset=0") +
         Line(2, "shot", 0, "ROOT", "CharOffset=9") +
         Line(3, "the", 4, "det", coref + "CharOffset=14") +
         Line(4, "man", 2, "dobj", coref + "CharOffset=18") +
         Line(5, "today.", 2, "npadvmod", "CharOffset=22") + "\n";
}

EventRecord Event(std::string name, std::string date) {
  EventRecord e;
  e.event_id = "e";
  e.victim_full_name = std::move(name);
  e.date = Date::Parse(date);
  return e;
}

}  // namespace

TEST_SUITE("corpus_io") {

TEST_CASE("minimal document parses into one sentence of five tokens") {
  const ParsedDocument doc = ParseDocument(FiveTokens());
  CHECK(doc.doc_id == "d1");
  CHECK(doc.event_id == "e1");
  CHECK(doc.publish_date == Date(2017, 5, 1));
  REQUIRE(doc.sentences.size() == 1);
  CHECK(doc.sentences[0].size() == 5);
  // 1-based file heads become 0-based; the root points at itself.
  CHECK(doc.sentences[0][0].head == 1);
  CHECK(doc.sentences[0][1].is_root());
}

TEST_CASE("a nine-column token line is a parse error naming the line") {
  std::string bad = kHeader + "1\tOfficers\tofficers\tX\t_\t_\t0\tROOT\tCharOffset=0\n";
  try {
    ParseDocument(bad);
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(e.line() == 6);
  }
}

TEST_CASE("missing header is a schema error") {
  std::string input = FiveTokens();
  input.erase(input.find("# event_id"), std::string("# event_id = e1\n").size());
  CHECK_THROWS_AS(ParseDocument(input), SchemaError);
}

TEST_CASE("head outside the sentence is a structural error") {
  std::string input = FiveTokens();
  input.replace(input.find("\t4\tdet"), 6, "\t9\tdet");
  CHECK_THROWS_AS(ParseDocument(input), StructuralError);
}

TEST_CASE("two adjacent Coref tokens form one chain with one two-token span") {
  const ParsedDocument doc = ParseDocument(FiveTokens("Coref=C1|"));
  REQUIRE(doc.coref_chains.count("C1") == 1);
  const auto &spans = doc.coref_chains.at("C1");
  REQUIRE(spans.size() == 1);
  CHECK(spans[0].sentence == 0);
  CHECK(spans[0].begin == 2);
  CHECK(spans[0].end == 4);
}

TEST_CASE("writer and reader round-trip") {
  for (const auto &spec : testing::MiniCorpus()) {
    const ParsedDocument doc = testing::BuildDoc(spec);
    CHECK(ParseDocument(WriteConllu(doc)) == doc);
  }
}

TEST_CASE("character offsets count code points") {
  testing::DocSpec spec;
  spec.sentences = {"José/PROPN/2/nsubj#PERSON ran=run/VERB/0/ROOT ~./PUNCT/2/punct"};
  const ParsedDocument doc = testing::BuildDoc(spec);
  CHECK(doc.text == "José ran.");
  CHECK(doc.sentences[0][1].char_offset == 5);
  CHECK(Utf8Length(doc.text) == 9);
  Utf8Index index(doc.text);
  CHECK(index.CharFromByte(6) == 5);
  CHECK(index.ByteFromChar(5) == 6);
}

TEST_CASE("bundled mini-corpus file matches its source") {
  std::string expected;
  for (const auto &spec : testing::MiniCorpus()) expected += testing::BuildConllu(spec);
  const std::string committed =
      ReadFile(fs::path(FRAMING_SOURCE_DIR) / "data/minicorpus/corpus.conllu");
  CHECK(committed == expected);
  CHECK(ParseConllu(committed).size() == 25);
}

TEST_CASE("slant line follows the label/score convention") {
  const auto slants = ParseSlants("breitbart.com\tright\t28\n");
  REQUIRE(slants.count("breitbart.com") == 1);
  CHECK(slants.at("breitbart.com").label == SlantLabel::kRight);
  CHECK(slants.at("breitbart.com").score == 28);
}

TEST_CASE("slant sign must agree with the label") {
  CHECK_THROWS_AS(ParseSlants("example.com\tleft\t+10\n"), ValidationError);
  CHECK_THROWS_AS(ParseSlants("example.com\tright\t40\n"), ValidationError);
  CHECK_THROWS_AS(ParseSlants("a.com\tleft\t-3\na.com\tleft\t-4\n"), ConflictError);
}

TEST_CASE("lexicon files") {
  CHECK_THROWS_AS(ParseLexicon("", "legal_language"), ValidationError);
  CHECK_THROWS_AS(ParseLexicon("Court\n", "legal_language"), ValidationError);
  const Lexicon lex = ParseLexicon("# comment\ncourt\n\njury\n", "legal_language");
  CHECK(lex.entries.size() == 2);
  CHECK(lex.contains("jury"));
}

TEST_CASE("event invariants") {
  const std::string base =
      R"({"event_id":"x","victim_full_name":"A B","age":30,"gender":"male",)"
      R"("race":"white","armed_status":"armed","weapon_terms":["gun"],)"
      R"("fleeing":false,"attack":false,"mental_illness":false,"video":false,)"
      R"("date":"2018-01-01"})";
  CHECK(ParseEvents(base + "\n").at("x").weapon_terms.size() == 1);
  CHECK_THROWS_AS(ParseEvents(base + "\n" + base + "\n"), ConflictError);
  std::string no_weapon = base;
  no_weapon.replace(no_weapon.find("[\"gun\"]"), 7, "[]");
  CHECK_THROWS_AS(ParseEvents(no_weapon), ValidationError);
  std::string old = base;
  old.replace(old.find("2018"), 4, "2010");
  CHECK_THROWS_AS(ParseEvents(old), ValidationError);
  std::string bad_age = base;
  bad_age.replace(bad_age.find("30"), 2, "130");
  CHECK_THROWS_AS(ParseEvents(bad_age), ValidationError);
}

TEST_CASE("search query template") {
  CHECK(BuildSearchQuery(Event("Jordan Edwards", "2017-04-29")) ==
        "(\"Jordan Edwards\" OR Jordan OR Edwards) AND "
        "(shooting OR shot OR killed OR died OR fight OR gun) AND "
        "(police OR officer OR officers OR law OR enforcement OR cop OR cops OR "
        "sheriff OR patrol) after:2017-04-28 before:2017-05-29");
}

TEST_CASE("single-token name is not repeated") {
  const std::string q = BuildSearchQuery(Event("Prince", "2016-04-21"));
  CHECK(q.rfind("(Prince) AND (shooting", 0) == 0);
}

TEST_CASE("date window crosses month and year boundaries") {
  const std::string q = BuildSearchQuery(Event("A B", "2019-12-31"));
  CHECK(q.find("after:2019-12-30 before:2020-01-30") != std::string::npos);
  EventRecord undated = Event("A B", "2019-12-31");
  undated.date.reset();
  CHECK_THROWS_AS(BuildSearchQuery(undated), ValidationError);
}

TEST_CASE("dates") {
  CHECK(Date::Parse("2020-02-28").AddDays(1).ToString() == "2020-02-29");
  CHECK(Date(2020, 3, 1).DaysSince(Date(2020, 2, 1)) == 29);
  CHECK_THROWS_AS(Date::Parse("2019-02-29"), ParseError);
  CHECK_THROWS_AS(Date::Parse("2019-2-1"), ParseError);
}

}  // TEST_SUITE
