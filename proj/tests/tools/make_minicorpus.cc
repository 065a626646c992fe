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

// Writes the mini-corpus as one CoNLL-U file.

#include <fstream>
#include <iostream>

#include "../support/minicorpus.h"

int main(int argc, char **argv) {
  if (argc != 2) {
    std::cerr << "usage: make_minicorpus OUTPUT.conllu\n";
    return 2;
  }
  std::ofstream out(argv[1], std::ios::binary);
  for (const auto &spec : framing::testing::MiniCorpus()) {
    out << framing::testing::BuildConllu(spec);
  }
  if (!out) {
    std::cerr << "cannot write " << argv[1] << "\n";
    return 1;
  }
  return 0;
}
