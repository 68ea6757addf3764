// Copyright 2026 The nuphase Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nuphase {

// Argument outside an operation's documented domain.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well-formed but outside the physics model's range of validity.
class ValidityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Quadrature failed to reach the requested tolerance.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double rel_change,
                 std::size_t evaluations)
      : std::runtime_error(what),
        rel_change_(rel_change),
        evaluations_(evaluations) {}

  double rel_change() const noexcept { return rel_change_; }
  std::size_t evaluations() const noexcept { return evaluations_; }

 private:
  double rel_change_;
  std::size_t evaluations_;
};

// Configuration document error; line is 0 when no single line is at fault.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace nuphase
