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

#ifndef FRAMING_QUERY_H_
#define FRAMING_QUERY_H_

#include <string>

#include "framing/records.h"

namespace framing {

// Builds the news search query for an event:
//
//   ("<full name>" OR <first> OR <last>) AND (shooting OR ...) AND
//   (police OR ...) after:<date - 1 day> before:<date + 30 days>
//
// Repeated name parts are emitted once; a part is quoted only if it
// contains a space. Throws ValidationError if the name is empty or the
// date is unknown.
std::string BuildSearchQuery(const EventRecord &event);

}  // namespace framing

#endif  // FRAMING_QUERY_H_
