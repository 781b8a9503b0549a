// Copyright 2026 The Authors.
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

#ifndef SBOMATCH_ERRORS_H_
#define SBOMATCH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace sbomatch {

// Malformed or invariant-violating input (bad element ids, overlapping
// pairs, negative weights, infeasible starting sets).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive routine was asked to run beyond its configured size bound.
class SizeBoundError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Instance text that does not follow the file grammar. `line()` is 1-based,
// 0 when the error is not tied to a line.
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& message)
      : InputError(line > 0 ? "line " + std::to_string(line) + ": " + message
                            : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace sbomatch

#endif  // SBOMATCH_ERRORS_H_
