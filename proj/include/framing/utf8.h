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

#ifndef FRAMING_UTF8_H_
#define FRAMING_UTF8_H_

#include <cstddef>
#include <string_view>
#include <vector>

namespace framing {

// Number of code points in a UTF-8 string. Continuation bytes are not
// counted; invalid sequences count one per lead byte.
std::size_t Utf8Length(std::string_view s);

// Maps byte positions of a UTF-8 string to code point positions and back.
// Character offsets everywhere in this library are code point indices.
class Utf8Index {
 public:
  explicit Utf8Index(std::string_view text);

  std::size_t CharFromByte(std::size_t byte) const;
  std::size_t ByteFromChar(std::size_t ch) const;
  std::size_t char_length() const { return char_to_byte_.size() - 1; }

 private:
  std::vector<std::size_t> byte_to_char_;
  std::vector<std::size_t> char_to_byte_;
};

}  // namespace framing

#endif  // FRAMING_UTF8_H_
