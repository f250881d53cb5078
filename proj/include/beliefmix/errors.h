// Copyright 2026 The beliefmix Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BELIEFMIX_ERRORS_H_
#define BELIEFMIX_ERRORS_H_

#include <stdexcept>
#include <string>

namespace beliefmix {

// Precondition or contract violation on a game-theoretic object: illegal
// action, terminal state queried for moves, unreachable infostate, and so on.
class DomainError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed input file. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                          message
                                    : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Invalid experiment configuration (unknown key, bad value).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Policy stabilization hit its batch limit.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(int batches, double last_variation)
      : std::runtime_error("policy did not stabilize after " +
                           std::to_string(batches) +
                           " batches; last variation " +
                           std::to_string(last_variation)),
        batches_(batches),
        last_variation_(last_variation) {}
  int batches() const { return batches_; }
  double last_variation() const { return last_variation_; }

 private:
  int batches_;
  double last_variation_;
};

}  // namespace beliefmix

#endif  // BELIEFMIX_ERRORS_H_
