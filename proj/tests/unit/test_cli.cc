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

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "framing/records.h"

namespace fs = std::filesystem;

namespace {

const fs::path kSource = FRAMING_SOURCE_DIR;
const fs::path kMini = kSource / "data/minicorpus";

// Fresh scratch directory per test case.
fs::path Scratch(const std::string &name) {
  const fs::path dir = fs::temp_directory_path() /
                       ("framing_cli_" + std::to_string(::getpid())) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int Run(const std::string &args) {
  const std::string cmd = std::string(FRAMING_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string Capture(const std::string &args) {
  const fs::path out = Scratch("capture") / "stdout.txt";
  const std::string cmd =
      std::string(FRAMING_CLI) + " " + args + " >" + out.string() + " 2>/dev/null";
  REQUIRE(std::system(cmd.c_str()) == 0);
  return framing::ReadFile(out);
}

std::string Extract(const fs::path &out, int jobs) {
  return "--jobs " + std::to_string(jobs) + " extract --corpus " + kMini.string() +
         " --events " + (kMini / "events.jsonl").string() + " --lexicons " +
         (kSource / "data/lexicons").string() + " --out " + out.string();
}

int CountLines(const fs::path &p) {
  std::ifstream in(p);
  int n = 0;
  for (std::string line; std::getline(in, line);) ++n;
  return n;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("extract writes one annotation line per document") {
  const fs::path out = Scratch("extract");
  REQUIRE(Run(Extract(out, 2)) == 0);
  CHECK(CountLines(out / "annotations.jsonl") == 25);
}

TEST_CASE("extract fails on an empty corpus") {
  const fs::path empty = Scratch("empty_corpus");
  const fs::path out = Scratch("empty_out");
  CHECK(Run("extract --corpus " + empty.string() + " --events " +
            (kMini / "events.jsonl").string() + " --lexicons " +
            (kSource / "data/lexicons").string() + " --out " + out.string()) == 1);
}

TEST_CASE("extract is deterministic across reruns and thread counts") {
  const fs::path a = Scratch("det_a"), b = Scratch("det_b");
  REQUIRE(Run(Extract(a, 1)) == 0);
  REQUIRE(Run(Extract(b, 8)) == 0);
  CHECK(framing::ReadFile(a / "annotations.jsonl") ==
        framing::ReadFile(b / "annotations.jsonl"));
  REQUIRE(Run(Extract(b, 8)) == 0);
  CHECK(framing::ReadFile(a / "annotations.jsonl") ==
        framing::ReadFile(b / "annotations.jsonl"));
}

TEST_CASE("query prints the search string") {
  const std::string out =
      Capture("query --events " + (kSource / "tests/data/query_events.jsonl").string());
  CHECK(out.find("(\"Jordan Edwards\" OR Jordan OR Edwards) AND (shooting OR shot OR "
                 "killed OR died OR fight OR gun) AND (police OR officer OR officers OR "
                 "law OR enforcement OR cop OR cops OR sheriff OR patrol) "
                 "after:2017-04-28 before:2017-05-29\n") != std::string::npos);
}

TEST_CASE("validate against the gold file gives an all-ones table") {
  const fs::path out = Scratch("validate");
  REQUIRE(Run(Extract(out, 1)) == 0);
  REQUIRE(Run("validate --annotations " + (out / "annotations.jsonl").string() +
              " --gold " + (kMini / "gold.jsonl").string() + " --out " + out.string()) == 0);
  std::istringstream metrics(framing::ReadFile(out / "metrics.csv"));
  std::string line;
  std::getline(metrics, line);
  int rows = 0;
  while (std::getline(metrics, line)) {
    CAPTURE(line);
    CHECK(line.find(",1.0000,1.0000,1.0000") != std::string::npos);
    ++rows;
  }
  CHECK(rows == 14);
  CHECK(framing::ReadFile(out / "summary.csv").find("order_spearman,1\n") !=
        std::string::npos);
}

TEST_CASE("timeseries on the synthetic series reproduces the reference Granger table") {
  const fs::path out = Scratch("timeseries");
  const fs::path syn = kSource / "data/synthetic";
  REQUIRE(Run("timeseries --series cause=" + (syn / "cause.csv").string() +
              " --series effect=" + (syn / "effect.csv").string() +
              " --series noise=" + (syn / "noise.csv").string() +
              " --granger-lags 1,2 --out " + out.string()) == 0);
  const std::string table = framing::ReadFile(out / "granger.csv");
  CHECK(table.find("cause,noise,1,0.2145725454,0.6434100357,") != std::string::npos);
  CHECK(table.find("effect,cause,1,2.248393558,0.1343893947,") != std::string::npos);
  CHECK(table.find("noise,effect,2,0.07369522967,0.9289650001,") != std::string::npos);
}

TEST_CASE("analyze writes the comparison tables") {
  const fs::path out = Scratch("analyze");
  REQUIRE(Run(Extract(out, 1)) == 0);
  REQUIRE(Run("analyze --annotations " + (out / "annotations.jsonl").string() +
              " --slants " + (kMini / "slants.tsv").string() + " --events " +
              (kMini / "events.jsonl").string() + " --out " + out.string()) == 0);
  for (const char *f : {"inclusion.csv", "ordering.csv", "style.csv", "moral.csv",
                        "leaning.csv", "conditional.csv", "agenda.csv"}) {
    CAPTURE(f);
    CHECK(fs::exists(out / f));
  }
  CHECK(CountLines(out / "inclusion.csv") == 15);
}

TEST_CASE("usage errors") {
  CHECK(Run("") == 1);
  CHECK(Run("frobnicate") == 1);
  CHECK(Run("extract --corpus /nonexistent") == 1);
  CHECK(Run("--help") == 0);
}

}  // TEST_SUITE
