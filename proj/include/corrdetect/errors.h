// Copyright 2026 The corrdetect Authors.
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

#ifndef CORRDETECT_ERRORS_H_
#define CORRDETECT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace corrdetect {

// Invalid argument values (probabilities out of range, size mismatches, ...).
// The CLI maps this to exit code 2.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Parameters for which a quantity is undefined, e.g. p in {0, 1} for the
// correlated model or rho = 0 for the polynomial-test threshold.
class DegenerateError : public ParameterError {
 public:
  explicit DegenerateError(const std::string& what) : ParameterError(what) {}
};

// Malformed input text. Carries the 1-based line number.
class ParseError : public ParameterError {
 public:
  ParseError(const std::string& what, int line)
      : ParameterError("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A request beyond what an exact enumeration or guard supports.
// The CLI maps this to exit code 3.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace corrdetect

#endif  // CORRDETECT_ERRORS_H_
