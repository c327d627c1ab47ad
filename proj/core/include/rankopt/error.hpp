/*
 * Copyright 2026 The rankopt Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RANKOPT_ERROR_HPP_
#define RANKOPT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rankopt {

// Caller broke a documented precondition (bad index, mismatched sizes, ...).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested loss cannot be handled by the divide-and-conquer solver.
class UnsuitableLossError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exhaustive oracle refused an instance above its size guard.
class OracleLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed input document. `line()` is 1-based, 0 when not line specific.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : std::runtime_error(line == 0 ? message
                                     : "line " + std::to_string(line) + ": " +
                                           message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Training objective blew up. Carries the regularized objective of every
// epoch evaluated so far, the offending one last.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& message, std::vector<double> objectives)
      : std::runtime_error(message), objectives_(std::move(objectives)) {}

  const std::vector<double>& objectives() const { return objectives_; }

 private:
  std::vector<double> objectives_;
};

}  // namespace rankopt

#endif  // RANKOPT_ERROR_HPP_
