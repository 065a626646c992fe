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

#ifndef FRAMING_TEXT_UTIL_H_
#define FRAMING_TEXT_UTIL_H_

#include <string>
#include <string_view>
#include <vector>

namespace framing {

std::string_view Trim(std::string_view s);
std::vector<std::string_view> Split(std::string_view s, char sep);
// ASCII lowercase.
std::string ToLower(std::string_view s);
bool HasUpper(std::string_view s);
// Escapes ECMAScript regex metacharacters.
std::string RegexEscape(std::string_view s);

}  // namespace framing

#endif  // FRAMING_TEXT_UTIL_H_
