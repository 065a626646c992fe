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

#include "framing/utf8.h"

namespace framing {

namespace {
inline bool IsContinuation(unsigned char c) { return (c & 0xC0) == 0x80; }
}  // namespace

std::size_t Utf8Length(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s) {
    if (!IsContinuation(c)) ++n;
  }
  return n;
}

Utf8Index::Utf8Index(std::string_view text) {
  byte_to_char_.resize(text.size() + 1);
  std::size_t ch = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!IsContinuation(static_cast<unsigned char>(text[i]))) {
      char_to_byte_.push_back(i);
      byte_to_char_[i] = ch++;
    } else {
      byte_to_char_[i] = ch == 0 ? 0 : ch - 1;
    }
  }
  char_to_byte_.push_back(text.size());
  byte_to_char_[text.size()] = ch;
}

std::size_t Utf8Index::CharFromByte(std::size_t byte) const {
  return byte_to_char_.at(byte);
}

std::size_t Utf8Index::ByteFromChar(std::size_t ch) const {
  return char_to_byte_.at(ch);
}

}  // namespace framing
