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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "framing/errors.h"
#include "framing/validation.h"

using namespace framing;

namespace {

FrameAnnotation Predicted(const std::string &id, std::vector<std::pair<Frame, int>> frames) {
  FrameAnnotation a;
  a.doc_id = id;
  for (auto [f, off] : frames) a.frame_offsets[static_cast<int>(f)] = off;
  return a;
}

GoldAnnotation Gold(const std::string &id, std::vector<Frame> order) {
  GoldAnnotation g;
  g.doc_id = id;
  g.frame_order = std::move(order);
  return g;
}

// Precision at each relevant hit, averaged over the relevant set.
double ReferenceAp(const std::vector<int> &ranking, const std::set<int> &relevant) {
  double sum = 0;
  int hits = 0;
  for (std::size_t k = 0; k < ranking.size(); ++k) {
    if (relevant.count(ranking[k])) sum += static_cast<double>(++hits) / (k + 1);
  }
  return sum / relevant.size();
}

constexpr Frame A = Frame::kRace, B = Frame::kAge, C = Frame::kVideo;

}  // namespace

TEST_SUITE("validation") {

TEST_CASE("gold file") {
  const auto gold = ParseGold(
      R"({"doc_id":"a","frame_order":["race","age"],"mft_gold":{"victim":["harm.vice"],"officer":[]}})"
      "\n");
  REQUIRE(gold.size() == 1);
  CHECK(gold[0].frame_order == std::vector<Frame>{A, B});
  CHECK(gold[0].mft_gold[0] == std::vector<MoralCategory>{MoralCategory::kHarmVice});
  CHECK_THROWS_AS(ParseGold(R"({"doc_id":"a","frame_order":["race","race"]})"),
                  ValidationError);
  CHECK_THROWS(ParseGold(R"({"doc_id":"a","frame_order":["colour"]})"));
}

TEST_CASE("binary metrics: perfect and complementary predictions") {
  std::vector<FrameAnnotation> pred{Predicted("a", {{A, 0}, {B, 4}}), Predicted("b", {})};
  std::vector<GoldAnnotation> gold{Gold("a", {A, B}), Gold("b", {})};
  for (const auto &m : ComputeBinaryMetrics(pred, gold)) {
    CHECK(m.accuracy == 1.0);
    if (m.frame == A || m.frame == B) {
      CHECK(m.precision == 1.0);
      CHECK(m.recall == 1.0);
    }
  }
  std::vector<FrameAnnotation> flipped{Predicted("a", {}), Predicted("b", {{A, 0}, {B, 4}})};
  for (const auto &m : ComputeBinaryMetrics(flipped, gold)) {
    if (m.frame == A || m.frame == B) {
      CHECK(m.accuracy == 0.0);
      CHECK(m.precision == 0.0);
      CHECK(m.recall == 0.0);
    }
  }
  CHECK_THROWS_AS(ComputeBinaryMetrics({Predicted("c", {})}, gold), ValidationError);
}

TEST_CASE("document order Spearman") {
  const GoldAnnotation gold = Gold("a", {A, B, C});
  CHECK(DocumentOrderSpearman(Predicted("a", {{A, 0}, {B, 5}, {C, 9}}), gold) ==
        doctest::Approx(1.0));
  CHECK(DocumentOrderSpearman(Predicted("a", {{A, 9}, {B, 5}, {C, 0}}), gold) ==
        doctest::Approx(-1.0));
  CHECK(DocumentOrderSpearman(Predicted("a", {{A, 9}, {B, 0}, {C, 5}}), gold) ==
        doctest::Approx(-0.5));
  CHECK(DocumentOrderSpearman(Predicted("a", {{A, 0}, {B, 9}, {C, 5}}), gold) ==
        doctest::Approx(0.5));
  // Only A predicted: B and C share the last midrank (2.5, 2.5).
  CHECK(DocumentOrderSpearman(Predicted("a", {{A, 3}}), gold) ==
        doctest::Approx(std::sqrt(0.75)));
  // Nothing predicted: all tied.
  CHECK(DocumentOrderSpearman(Predicted("a", {}), gold) == 0.0);
  CHECK_FALSE(DocumentOrderSpearman(Predicted("a", {{A, 0}}), Gold("a", {A})));
}

TEST_CASE("mean order Spearman skips short gold lists") {
  std::vector<FrameAnnotation> pred{Predicted("a", {{A, 0}, {B, 1}}),
                                    Predicted("b", {{A, 1}, {B, 0}}), Predicted("c", {})};
  std::vector<GoldAnnotation> gold{Gold("a", {A, B}), Gold("b", {A, B}), Gold("c", {C})};
  CHECK(OrderSpearman(pred, gold) == doctest::Approx(0.0));
}

TEST_CASE("average precision") {
  CHECK(AveragePrecision({3, 1, 0, 2}, {1, 3}) == 1.0);
  CHECK(AveragePrecision({0, 2, 1, 3}, {1, 3}) == doctest::Approx(5.0 / 12.0));
  std::vector<int> perm{0, 1, 2, 3};
  const std::set<int> relevant{1, 3};
  int checked = 0;
  do {
    CHECK(AveragePrecision(perm, relevant) == doctest::Approx(ReferenceAp(perm, relevant)));
    ++checked;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(checked == 24);
}

TEST_CASE("category ranking is stable on ties") {
  std::array<int, kNumMoralCategories> zeros{};
  std::vector<int> expected(kNumMoralCategories);
  std::iota(expected.begin(), expected.end(), 0);
  CHECK(RankCategories(zeros) == expected);
  std::array<int, kNumMoralCategories> scores{};
  scores[4] = 2;
  scores[7] = 2;
  scores[1] = 5;
  const auto r = RankCategories(scores);
  CHECK(std::vector<int>(r.begin(), r.begin() + 4) == std::vector<int>{1, 4, 7, 0});
}

TEST_CASE("foundation mAP") {
  FrameAnnotation p = Predicted("a", {});
  p.mft_scores[0][static_cast<int>(MoralCategory::kHarmVice)] = 3;
  p.mft_scores[1][static_cast<int>(MoralCategory::kCareVirtue)] = 1;
  GoldAnnotation g = Gold("a", {});
  g.mft_gold[0] = {MoralCategory::kHarmVice};
  g.mft_gold[1] = {MoralCategory::kFairnessVirtue};
  const FoundationMap m = ComputeFoundationMap({p}, {g});
  CHECK(m.victim_map == 1.0);
  CHECK(m.victim_docs == 1);
  // care(1) ranks first, then zeros by id: harm(2nd), fairness(3rd).
  CHECK(m.officer_map == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("metrics table") {
  const auto csv = MetricsToCsv(ComputeBinaryMetrics({Predicted("a", {{A, 0}})}, {Gold("a", {A})}));
  CHECK(csv.rfind("frame,tp,fp,fn,tn,accuracy,precision,recall\n", 0) == 0);
  CHECK(csv.find("race,1,0,0,0,1.0000,1.0000,1.0000\n") != std::string::npos);
  CHECK(csv.find("age,0,0,0,1,1.0000,NA,NA\n") != std::string::npos);
}

}  // TEST_SUITE
