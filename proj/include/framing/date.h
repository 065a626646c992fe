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

#ifndef FRAMING_DATE_H_
#define FRAMING_DATE_H_

#include <chrono>
#include <compare>
#include <string>
#include <string_view>

namespace framing {

// Calendar date with day arithmetic. Serialized as ISO-8601 (YYYY-MM-DD).
class Date {
 public:
  Date() = default;
  explicit Date(std::chrono::sys_days days) : days_(days) {}
  Date(int year, unsigned month, unsigned day);

  // Throws ParseError on anything other than a valid YYYY-MM-DD string.
  static Date Parse(std::string_view iso);

  std::string ToString() const;
  Date AddDays(int n) const { return Date(days_ + std::chrono::days(n)); }
  // Signed number of days from `other` to this date.
  int DaysSince(const Date &other) const {
    return static_cast<int>((days_ - other.days_).count());
  }
  std::chrono::sys_days days() const { return days_; }

  auto operator<=>(const Date &) const = default;

 private:
  std::chrono::sys_days days_{};
};

}  // namespace framing

#endif  // FRAMING_DATE_H_
