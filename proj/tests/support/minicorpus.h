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

#ifndef FRAMING_TESTS_SUPPORT_MINICORPUS_H_
#define FRAMING_TESTS_SUPPORT_MINICORPUS_H_

#include <vector>

#include "fixture.h"

namespace framing::testing {

// The bundled 25-document corpus: five events covered by outlets across
// the slant range. data/minicorpus/corpus.conllu is rendered from this.
const std::vector<DocSpec> &MiniCorpus();

}  // namespace framing::testing

#endif  // FRAMING_TESTS_SUPPORT_MINICORPUS_H_
