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

#include "framing/validation.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "framing/errors.h"
#include "framing/stats.h"
#include "json.hpp"

namespace framing {

namespace {

using json = nlohmann::json;

std::vector<MoralCategory> ParseRanked(const json &j, int line) {
  std::vector<MoralCategory> out;
  if (j.is_null()) return out;
  if (!j.is_array()) throw SchemaError("mft_gold lists must be arrays (line " + std::to_string(line) + ")");
  for (const auto &c : j) {
    auto cat = ParseMoralCategory(c.get<std::string>());
    if (!cat) throw SchemaError("unknown moral category '" + c.get<std::string>() + "'");
    if (std::find(out.begin(), out.end(), *cat) != out.end()) {
      throw ValidationError("duplicate moral category '" + c.get<std::string>() + "'");
    }
    out.push_back(*cat);
  }
  return out;
}

// Pairs each gold record with its prediction by doc id.
std::vector<std::pair<const FrameAnnotation *, const GoldAnnotation *>> Pair(
    const std::vector<FrameAnnotation> &predicted,
    const std::vector<GoldAnnotation> &gold) {
  std::map<std::string, const FrameAnnotation *> by_id;
  for (const auto &p : predicted) {
    if (!by_id.emplace(p.doc_id, &p).second) {
      throw ConflictError("duplicate predicted doc_id '" + p.doc_id + "'");
    }
  }
  if (by_id.size() != gold.size()) {
    throw ValidationError("predicted and gold cover different documents");
  }
  std::vector<std::pair<const FrameAnnotation *, const GoldAnnotation *>> out;
  for (const auto &g : gold) {
    auto it = by_id.find(g.doc_id);
    if (it == by_id.end()) {
      throw ValidationError("gold doc_id '" + g.doc_id + "' has no prediction");
    }
    out.emplace_back(it->second, &g);
  }
  return out;
}

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

double Ndcg(const std::vector<int> &ranking, const std::vector<MoralCategory> &gold) {
  std::array<double, kNumMoralCategories> rel{};
  for (std::size_t i = 0; i < gold.size(); ++i) {
    rel[static_cast<int>(gold[i])] = static_cast<double>(gold.size() - i);
  }
  double dcg = 0;
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    dcg += rel[ranking[i]] / std::log2(static_cast<double>(i) + 2.0);
  }
  double ideal = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    ideal += static_cast<double>(gold.size() - i) / std::log2(static_cast<double>(i) + 2.0);
  }
  return ideal > 0 ? dcg / ideal : 0.0;
}

}  // namespace

std::vector<GoldAnnotation> ParseGold(std::string_view jsonl) {
  std::vector<GoldAnnotation> out;
  std::istringstream in{std::string(jsonl)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error &e) {
      throw ParseError(e.what(), lineno);
    }
    GoldAnnotation g;
    try {
      g.doc_id = j.at("doc_id").get<std::string>();
      for (const auto &f : j.at("frame_order")) {
        auto frame = ParseFrame(f.get<std::string>());
        if (!frame) throw SchemaError("unknown frame '" + f.get<std::string>() + "'");
        if (std::find(g.frame_order.begin(), g.frame_order.end(), *frame) !=
            g.frame_order.end()) {
          throw ValidationError("duplicate frame '" + f.get<std::string>() +
                                "' in gold for " + g.doc_id);
        }
        g.frame_order.push_back(*frame);
      }
      if (j.contains("mft_gold")) {
        const json &m = j.at("mft_gold");
        g.mft_gold[0] = ParseRanked(m.value("victim", json()), lineno);
        g.mft_gold[1] = ParseRanked(m.value("officer", json()), lineno);
      }
    } catch (const json::exception &e) {
      throw SchemaError("gold line " + std::to_string(lineno) + ": " + e.what());
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<BinaryMetrics> ComputeBinaryMetrics(
    const std::vector<FrameAnnotation> &predicted,
    const std::vector<GoldAnnotation> &gold) {
  const auto pairs = Pair(predicted, gold);
  std::vector<BinaryMetrics> out;
  for (Frame f : AllFrames()) {
    BinaryMetrics m;
    m.frame = f;
    for (const auto &[p, g] : pairs) {
      const bool pred = p->has(f);
      const bool truth =
          std::find(g->frame_order.begin(), g->frame_order.end(), f) != g->frame_order.end();
      if (pred && truth) ++m.tp;
      else if (pred) ++m.fp;
      else if (truth) ++m.fn;
      else ++m.tn;
    }
    const int total = m.tp + m.fp + m.fn + m.tn;
    m.accuracy = total ? static_cast<double>(m.tp + m.tn) / total : 0.0;
    if (m.tp + m.fp > 0) m.precision = static_cast<double>(m.tp) / (m.tp + m.fp);
    if (m.tp + m.fn > 0) m.recall = static_cast<double>(m.tp) / (m.tp + m.fn);
    out.push_back(m);
  }
  return out;
}

std::optional<double> DocumentOrderSpearman(const FrameAnnotation &predicted,
                                            const GoldAnnotation &gold) {
  const std::size_t k = gold.frame_order.size();
  if (k < 2) return std::nullopt;
  std::vector<double> gold_rank(k), keys(k);
  const double absent = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < k; ++i) {
    gold_rank[i] = static_cast<double>(i + 1);
    const FrameOffset &off = predicted.offset(gold.frame_order[i]);
    keys[i] = off ? static_cast<double>(*off) : absent;
  }
  const std::vector<double> pred_rank = MidRanks(keys);
  if (std::all_of(pred_rank.begin(), pred_rank.end(),
                  [&](double r) { return r == pred_rank[0]; })) {
    return 0.0;
  }
  return PearsonR(gold_rank, pred_rank);
}

double OrderSpearman(const std::vector<FrameAnnotation> &predicted,
                     const std::vector<GoldAnnotation> &gold,
                     Diagnostics *diagnostics) {
  const auto pairs = Pair(predicted, gold);
  double sum = 0;
  std::size_t n = 0;
  for (const auto &[p, g] : pairs) {
    auto rho = DocumentOrderSpearman(*p, *g);
    if (!rho) {
      if (diagnostics) {
        diagnostics->Add("order: " + g->doc_id + " has fewer than two gold frames; skipped");
      }
      continue;
    }
    sum += *rho;
    ++n;
  }
  if (n == 0) throw UndefinedStatistic("no document has two or more gold frames");
  return sum / static_cast<double>(n);
}

double AveragePrecision(const std::vector<int> &ranking,
                        const std::set<int> &relevant) {
  if (relevant.empty()) throw UndefinedStatistic("average precision of an empty relevant set");
  double sum = 0;
  int hits = 0;
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    if (relevant.count(ranking[i])) {
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(i + 1);
    }
  }
  return sum / static_cast<double>(relevant.size());
}

std::vector<int> RankCategories(const std::array<int, kNumMoralCategories> &scores) {
  std::vector<int> order(kNumMoralCategories);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return scores[a] > scores[b]; });
  return order;
}

FoundationMap ComputeFoundationMap(const std::vector<FrameAnnotation> &predicted,
                                   const std::vector<GoldAnnotation> &gold) {
  const auto pairs = Pair(predicted, gold);
  FoundationMap out;
  double ap[2] = {0, 0}, ndcg[2] = {0, 0};
  std::size_t docs[2] = {0, 0};
  for (const auto &[p, g] : pairs) {
    for (int role = 0; role < 2; ++role) {
      const auto &truth = g->mft_gold[role];
      if (truth.empty()) continue;
      const std::vector<int> ranking = RankCategories(p->mft_scores[role]);
      std::set<int> relevant;
      for (MoralCategory c : truth) relevant.insert(static_cast<int>(c));
      ap[role] += AveragePrecision(ranking, relevant);
      ndcg[role] += Ndcg(ranking, truth);
      ++docs[role];
    }
  }
  const auto mean = [](double s, std::size_t n) { return n ? s / static_cast<double>(n) : 0.0; };
  out.victim_map = mean(ap[0], docs[0]);
  out.officer_map = mean(ap[1], docs[1]);
  out.victim_ndcg = mean(ndcg[0], docs[0]);
  out.officer_ndcg = mean(ndcg[1], docs[1]);
  out.victim_docs = docs[0];
  out.officer_docs = docs[1];
  return out;
}

std::string MetricsToCsv(const std::vector<BinaryMetrics> &metrics) {
  std::ostringstream out;
  out << "frame,tp,fp,fn,tn,accuracy,precision,recall\n";
  for (const auto &m : metrics) {
    out << FrameName(m.frame) << ',' << m.tp << ',' << m.fp << ',' << m.fn << ','
        << m.tn << ',' << Num(m.accuracy) << ','
        << (m.precision ? Num(*m.precision) : "NA") << ','
        << (m.recall ? Num(*m.recall) : "NA") << '\n';
  }
  return out.str();
}

}  // namespace framing
