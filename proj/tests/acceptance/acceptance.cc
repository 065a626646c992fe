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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if
// any criterion fails.
//
// usage: acceptance FRAMING_CLI SOURCE_DIR SCRATCH_DIR

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "conformance.h"
#include "oracles.h"
#include "framing/analytics.h"
#include "framing/conllu.h"
#include "framing/pipeline.h"
#include "framing/query.h"
#include "framing/simulate.h"
#include "framing/stats.h"
#include "framing/timeseries.h"
#include "framing/validation.h"

namespace fs = std::filesystem;
using namespace framing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void Fail(const std::string &why) {
    if (pass) detail.clear();
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

struct Context {
  fs::path cli;
  fs::path source;
  fs::path scratch;
};

std::string Fmt(const char *format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

void CheckRuntime(Outcome &o, std::chrono::steady_clock::time_point start, double limit) {
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= limit) {
    o.Fail("runtime " + Fmt("%.2f", seconds) + " s over " + Fmt("%.0f", limit) + " s");
  } else if (o.pass) {
    o.detail += (o.detail.empty() ? "" : ", ") + Fmt("%.2f s", seconds);
  }
}

Outcome RegexConformance(const Context &) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  int total = 0;
  for (const auto &table : testing::RegexTables()) {
    int pos = 0, neg = 0;
    for (const auto &c : table.cases) {
      ++total;
      (c.expect_match ? pos : neg)++;
      if (table.matches(c.input) != c.expect_match) {
        o.Fail(table.pattern_name + " on '" + c.input + "'");
      }
    }
    if (pos < 6 || neg < 6) o.Fail(table.pattern_name + " table too small");
  }
  if (o.pass) o.detail = std::to_string(total) + " cases";
  CheckRuntime(o, start, 1.0);
  return o;
}

Outcome AlgorithmFidelity(const Context &) {
  Outcome o;
  const auto &cases = testing::AlgorithmCases();
  for (const auto &c : cases) {
    const std::string got = c.run();
    if (got != c.expected) o.Fail(c.name + ": got '" + got + "'");
  }
  if (cases.size() != 12) o.Fail("expected 12 fixtures");
  if (o.pass) o.detail = std::to_string(cases.size()) + " fixtures";
  return o;
}

Outcome MiniGold(const Context &ctx) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  const fs::path mini = ctx.source / "data/minicorpus";
  const auto docs = LoadCorpus(mini);
  const auto result = ExtractAll(docs, LoadEvents(mini / "events.jsonl"),
                                 LoadLexicons(ctx.source / "data/lexicons"), {}, 1);
  const auto gold = ParseGold(ReadFile(mini / "gold.jsonl"));
  double min_p = 1, min_r = 1;
  for (const auto &m : ComputeBinaryMetrics(result.annotations, gold)) {
    const std::string name(FrameName(m.frame));
    if (!m.precision || !m.recall) {
      o.Fail(name + " has no positives");
      continue;
    }
    min_p = std::min(min_p, *m.precision);
    min_r = std::min(min_r, *m.recall);
    if (*m.precision < 0.9) o.Fail(name + " precision " + Fmt("%.3f", *m.precision));
    if (*m.recall < 0.9) o.Fail(name + " recall " + Fmt("%.3f", *m.recall));
  }
  const double rho = OrderSpearman(result.annotations, gold);
  if (rho < 0.9) o.Fail("order Spearman " + Fmt("%.3f", rho));
  if (docs.size() != 25) o.Fail("expected 25 documents");
  if (o.pass) {
    o.detail = "min precision " + Fmt("%.3f", min_p) + ", min recall " + Fmt("%.3f", min_r) +
               ", Spearman " + Fmt("%.3f", rho);
  }
  CheckRuntime(o, start, 5.0);
  return o;
}

Outcome StatisticalOracles(const Context &) {
  Outcome o;
  std::mt19937_64 rng(16);
  int pairs = 0;
  double worst = 0;
  for (int na = 1; na <= 15; ++na) {
    for (int nb = 1; na + nb <= 16; ++nb) {
      for (int levels : {2, 4, 1000}) {
        std::uniform_int_distribution<int> d(0, levels - 1);
        std::vector<double> a(na), b(nb);
        for (double &x : a) x = d(rng);
        for (double &x : b) x = d(rng);
        const double p = MannWhitneyU(a, b).p;
        const double diff = std::abs(p - testing::EnumeratedMannWhitneyP(a, b));
        worst = std::max(worst, diff);
        if (diff > 1e-9) o.Fail("MWU " + std::to_string(na) + "+" + std::to_string(nb));
        ++pairs;
      }
    }
  }
  std::normal_distribution<double> normal;
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<double> a(30), b(25);
    for (double &x : a) x = normal(rng);
    for (double &x : b) x = normal(rng) + 0.3;
    const double d = CohensD(a, b);
    const double shift = normal(rng) * 10;
    for (double &x : a) x += shift;
    for (double &x : b) x += shift;
    if (std::abs(CohensD(a, b) - d) > 1e-12) o.Fail("Cohen's d not shift invariant");
    std::vector<double> c = a;
    for (double &x : c) x += 1.0;
    if (std::abs(CohensD(a, c) - 1.0 / std::sqrt(Variance(a))) > 1e-12) {
      o.Fail("Cohen's d shift construction");
    }
  }
  for (int rep = 0; rep < 20; ++rep) {
    const double slope = normal(rng) * 5, intercept = normal(rng) * 5;
    std::vector<double> x(12), y(12);
    for (int i = 0; i < 12; ++i) {
      x[i] = normal(rng) * 3;
      y[i] = slope * x[i] + intercept;
    }
    const LineFit fit = FitLine(x, y);
    if (std::abs(fit.slope - slope) > 1e-10 || std::abs(fit.intercept - intercept) > 1e-10) {
      o.Fail("OLS closed form");
    }
    if (std::abs(std::abs(PearsonR(x, y)) - 1.0) > 1e-10) o.Fail("Pearson on exact line");
  }
  if (o.pass) {
    o.detail = std::to_string(pairs) + " MWU pairs, max |dp| " + Fmt("%.1e", worst);
  }
  return o;
}

Outcome InterventionRecovery(const Context &) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  Rng rng(20200525);
  const auto pulse = RandomPulses(500, 10, rng);
  const auto x = SimulateIntervention(pulse, 0.5, 2.0, 0.1, 0.05, rng);
  const InterventionFit fit = FitIntervention(x, pulse);
  auto check = [&](const char *name, double est, double se, double truth) {
    if (std::abs(est - truth) > 3 * se) {
      o.Fail(std::string(name) + " " + Fmt("%.4f", est) + " not within 3 SE of truth");
    }
  };
  check("beta0", fit.beta0, fit.se_beta0, 0.5);
  check("beta1", fit.beta1, fit.se_beta1, 2.0);
  check("c", fit.c, fit.se_c, 0.1);
  int quiet = 0;
  for (int rep = 0; rep < 100; ++rep) {
    Rng r(7000 + rep);
    const auto p = RandomPulses(500, 10, r);
    const auto y = SimulateIntervention(p, 0.5, 0.0, 0.1, 0.05, r);
    if (FitIntervention(y, p).p_beta1 > 0.05) ++quiet;
  }
  if (quiet < 90) o.Fail("null replicates with p > 0.05: " + std::to_string(quiet));
  if (o.pass) {
    o.detail = "beta0 " + Fmt("%.4f", fit.beta0) + ", beta1 " + Fmt("%.4f", fit.beta1) +
               ", c " + Fmt("%.4f", fit.c) + ", null quiet " + std::to_string(quiet) + "/100";
  }
  CheckRuntime(o, start, 10.0);
  return o;
}

Outcome GrangerDirection(const Context &) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  Rng rng(20200904);
  const CausalPair pair = SimulateCausalPair(500, 0.9, 0.1, rng);
  const double forward = Granger(pair.cause, pair.effect, 1).p_value;
  const double reverse = Granger(pair.effect, pair.cause, 1).p_value;
  if (!(forward < 0.001)) o.Fail("forward p " + Fmt("%.3g", forward));
  if (!(reverse > 0.05)) o.Fail("reverse p " + Fmt("%.3g", reverse));
  if (o.pass) o.detail = "forward p " + Fmt("%.3g", forward) + ", reverse p " + Fmt("%.3g", reverse);
  CheckRuntime(o, start, 5.0);
  return o;
}

Outcome OrderingSemantics(const Context &) {
  Outcome o;
  FrameAnnotation a;
  const int offsets[] = {50, 10, 90, 30, 70};  // age, armed, attack, criminal, fleeing
  for (int i = 0; i < 5; ++i) a.frame_offsets[i] = offsets[i];
  const auto r = InverseRanks(a);
  const std::pair<int, double> expected[] = {
      {1, 1.0}, {3, 1.0 / 2}, {0, 1.0 / 3}, {4, 1.0 / 4}, {2, 1.0 / 5}};
  for (auto [frame, value] : expected) {
    if (r[frame] != value) o.Fail(std::string(FrameName(static_cast<Frame>(frame))) + " rank");
  }
  std::vector<FrameAnnotation> docs;
  GroupAssignment groups;
  for (int i = 0; i < 10; ++i) {
    FrameAnnotation d;
    d.frame_offsets[static_cast<int>(i % 2 ? Frame::kAge : Frame::kVideo)] = i;
    d.frame_offsets[static_cast<int>(Frame::kRace)] = 40 + i;
    if (i % 3 == 0) d.frame_offsets[static_cast<int>(Frame::kSystemic)] = 100;
    docs.push_back(d);
    groups.push_back(i < 5 ? Group::kLiberal : Group::kConservative);
  }
  for (const auto &row : OrderingStats(docs, groups)) {
    if (row.id == "race" && (row.liberal != 0.5 || row.conservative != 0.5)) {
      o.Fail("second-place frame mean " + Fmt("%.17g", row.liberal));
    }
  }
  if (o.pass) o.detail = "ranks 1..1/5 exact, second-place mean 0.500";
  return o;
}

int Shell(const std::string &cmd) {
  const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome Determinism(const Context &ctx) {
  Outcome o;
  const fs::path mini = ctx.source / "data/minicorpus";
  auto pipeline = [&](const fs::path &out, int jobs) {
    fs::remove_all(out);
    fs::create_directories(out);
    const std::string cli = ctx.cli.string() + " --jobs " + std::to_string(jobs);
    const std::string ann = (out / "annotations.jsonl").string();
    return Shell(cli + " extract --corpus " + mini.string() + " --events " +
                 (mini / "events.jsonl").string() + " --lexicons " +
                 (ctx.source / "data/lexicons").string() + " --out " + out.string()) == 0 &&
           Shell(cli + " analyze --annotations " + ann + " --slants " +
                 (mini / "slants.tsv").string() + " --events " +
                 (mini / "events.jsonl").string() + " --out " + out.string()) == 0 &&
           Shell(cli + " timeseries --annotations " + ann + " --events " +
                 (mini / "events.jsonl").string() + " --high-profile " +
                 (mini / "high_profile.txt").string() + " --out " + out.string()) == 0;
  };
  const fs::path runs[] = {ctx.scratch / "jobs1_a", ctx.scratch / "jobs1_b",
                           ctx.scratch / "jobs8_a", ctx.scratch / "jobs8_b"};
  const int jobs[] = {1, 1, 8, 8};
  for (int i = 0; i < 4; ++i) {
    if (!pipeline(runs[i], jobs[i])) o.Fail("pipeline failed in " + runs[i].string());
  }
  if (!o.pass) return o;
  std::vector<std::string> names;
  for (const auto &e : fs::directory_iterator(runs[0])) names.push_back(e.path().filename());
  std::sort(names.begin(), names.end());
  for (int i = 1; i < 4; ++i) {
    std::size_t count = 0;
    for (const auto &e : fs::directory_iterator(runs[i])) (void)e, ++count;
    if (count != names.size()) o.Fail("file sets differ in " + runs[i].string());
    for (const auto &name : names) {
      if (!fs::exists(runs[i] / name) ||
          ReadFile(runs[0] / name) != ReadFile(runs[i] / name)) {
        o.Fail(name + " differs in " + runs[i].filename().string());
      }
    }
  }
  if (o.pass) o.detail = std::to_string(names.size()) + " files identical across 4 runs";
  return o;
}

Outcome QueryBuilder(const Context &ctx) {
  Outcome o;
  const std::string kTemplate =
      "(NAMES) AND (shooting OR shot OR killed OR died OR fight OR gun) AND "
      "(police OR officer OR officers OR law OR enforcement OR cop OR cops OR sheriff OR "
      "patrol) after:AFTER before:BEFORE";
  struct Expect {
    const char *id, *names, *after, *before;
  };
  const Expect expected[] = {
      {"q1-edwards", "\"Jordan Edwards\" OR Jordan OR Edwards", "2017-04-28", "2017-05-29"},
      {"q2-prince", "Prince", "2016-04-20", "2016-05-21"},
      {"q3-jean", "\"Botham Shem Jean\" OR Botham OR Jean", "2018-09-05", "2018-10-06"},
      {"q4-boundary", "\"Atatiana Jefferson\" OR Atatiana OR Jefferson", "2019-12-30",
       "2020-01-30"},
      {"q5-leap", "\"Ana Maria de la Cruz\" OR Ana OR Cruz", "2020-02-28", "2020-03-30"},
  };
  const auto events = LoadEvents(ctx.source / "tests/data/query_events.jsonl");
  if (events.size() != 5) o.Fail("expected 5 fixtures");
  for (const auto &e : expected) {
    std::string want = kTemplate;
    want.replace(want.find("NAMES"), 5, e.names);
    want.replace(want.find("AFTER"), 5, e.after);
    want.replace(want.find("BEFORE"), 6, e.before);
    const auto it = events.find(e.id);
    if (it == events.end()) {
      o.Fail(std::string("missing ") + e.id);
      continue;
    }
    const std::string got = BuildSearchQuery(it->second);
    if (got != want) o.Fail(std::string(e.id) + ": " + got);
  }
  if (o.pass) o.detail = "5 fixtures exact";
  return o;
}

}  // namespace

int main(int argc, char **argv) {
  if (argc != 4) {
    std::cerr << "usage: acceptance FRAMING_CLI SOURCE_DIR SCRATCH_DIR\n";
    return 2;
  }
  const Context ctx{fs::absolute(argv[1]), fs::absolute(argv[2]), fs::absolute(argv[3])};
  fs::create_directories(ctx.scratch);
  const std::vector<std::pair<std::string, std::function<Outcome(const Context &)>>> criteria{
      {"regex conformance", RegexConformance},
      {"algorithm fidelity", AlgorithmFidelity},
      {"mini-gold extraction", MiniGold},
      {"statistical oracles", StatisticalOracles},
      {"AR(1) intervention recovery", InterventionRecovery},
      {"Granger directionality", GrangerDirection},
      {"ordering semantics", OrderingSemantics},
      {"determinism", Determinism},
      {"query builder", QueryBuilder},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second(ctx);
    } catch (const std::exception &e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first
              << " (" << o.detail << ")" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
