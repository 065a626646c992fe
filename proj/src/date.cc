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

#include "framing/date.h"

#include <cstdio>

#include "framing/errors.h"

namespace framing {

namespace {

bool ParseDigits(std::string_view s, int *out) {
  if (s.empty()) return false;
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  *out = v;
  return true;
}

}  // namespace

Date::Date(int year, unsigned month, unsigned day) {
  std::chrono::year_month_day ymd{std::chrono::year(year),
                                  std::chrono::month(month),
                                  std::chrono::day(day)};
  if (!ymd.ok()) {
    throw ParseError("invalid calendar date " + std::to_string(year) + "-" +
                     std::to_string(month) + "-" + std::to_string(day));
  }
  days_ = std::chrono::sys_days(ymd);
}

Date Date::Parse(std::string_view iso) {
  int y, m, d;
  if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-' ||
      !ParseDigits(iso.substr(0, 4), &y) || !ParseDigits(iso.substr(5, 2), &m) ||
      !ParseDigits(iso.substr(8, 2), &d)) {
    throw ParseError("expected YYYY-MM-DD date, got '" + std::string(iso) + "'");
  }
  return Date(y, m, d);
}

std::string Date::ToString() const {
  std::chrono::year_month_day ymd{days_};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()));
  return buf;
}

}  // namespace framing
