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

#ifndef FRAMING_ERRORS_H_
#define FRAMING_ERRORS_H_

#include <stdexcept>
#include <string>

namespace framing {

// Base class for every error raised by the library. The CLI maps these to
// exit code 1 (input error); anything else is treated as internal.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string &message, int line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  explicit ParseError(const std::string &message) : Error(message) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

// A required header or field is missing.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Tree structure is inconsistent (head outside sentence, bad offsets).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A record violates a type invariant. The message names the field.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Duplicate keys across records.
class ConflictError : public Error {
 public:
  using Error::Error;
};

// A statistic is undefined for the given input (empty group, zero
// variance, a single regression bin, ...).
class UndefinedStatistic : public Error {
 public:
  using Error::Error;
};

// Regression design matrix is rank deficient.
class SingularFit : public Error {
 public:
  using Error::Error;
};

}  // namespace framing

#endif  // FRAMING_ERRORS_H_
