// Copyright 2026 The twotree-enum Authors.
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

#ifndef TWOTREE_ERRORS_H_
#define TWOTREE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace twotree {

// Malformed graph text. `line()` is 1-based; 0 when the problem is not tied
// to a single line (e.g. a missing edge line at end of input).
class GraphFormatError : public std::runtime_error {
 public:
  GraphFormatError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// The input is well formed but outside the class an algorithm accepts.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotTwoTreeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotChordalError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A size guard or cap was exceeded (brute-force limits, cap-n, edge-mask
// width).
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twotree

#endif  // TWOTREE_ERRORS_H_
