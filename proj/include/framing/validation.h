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

#ifndef FRAMING_VALIDATION_H_
#define FRAMING_VALIDATION_H_

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "framing/analytics.h"
#include "framing/frames.h"

namespace framing {

// Hand-labelled reference for one document.
struct GoldAnnotation {
  std::string doc_id;
  std::vector<Frame> frame_order;  // order of first appearance
  std::array<std::vector<MoralCategory>, 2> mft_gold;  // ranked, per role
};

std::vector<GoldAnnotation> ParseGold(std::string_view jsonl);

struct BinaryMetrics {
  Frame frame = Frame::kAge;
  int tp = 0, fp = 0, fn = 0, tn = 0;
  double accuracy = 0;
  std::optional<double> precision;  // nullopt when nothing was predicted
  std::optional<double> recall;     // nullopt when gold has no positives
};

// Throws ValidationError unless both sides cover the same doc ids.
std::vector<BinaryMetrics> ComputeBinaryMetrics(
    const std::vector<FrameAnnotation> &predicted,
    const std::vector<GoldAnnotation> &gold);

// Spearman correlation between gold and predicted order for one document,
// restricted to gold frames; frames the prediction misses share the last
// rank. nullopt when gold has fewer than two frames.
std::optional<double> DocumentOrderSpearman(const FrameAnnotation &predicted,
                                            const GoldAnnotation &gold);

// Mean of the per-document values.
double OrderSpearman(const std::vector<FrameAnnotation> &predicted,
                     const std::vector<GoldAnnotation> &gold,
                     Diagnostics *diagnostics = nullptr);

// Average precision of a ranking against an unordered relevant set.
double AveragePrecision(const std::vector<int> &ranking,
                        const std::set<int> &relevant);

// Categories sorted by descending score, ties by category order.
std::vector<int> RankCategories(const std::array<int, kNumMoralCategories> &scores);

struct FoundationMap {
  double victim_map = 0;
  double officer_map = 0;
  double victim_ndcg = 0;
  double officer_ndcg = 0;
  std::size_t victim_docs = 0;
  std::size_t officer_docs = 0;
};

FoundationMap ComputeFoundationMap(const std::vector<FrameAnnotation> &predicted,
                                   const std::vector<GoldAnnotation> &gold);

std::string MetricsToCsv(const std::vector<BinaryMetrics> &metrics);

}  // namespace framing

#endif  // FRAMING_VALIDATION_H_
