// Copyright 2026 The gausskit Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gausskit {

// Bad numeric parameter (alpha outside (0,1), non-finite exponent, ...).
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& message)
      : std::invalid_argument(message) {}
};

// A closed-form quantity left the representable range.
class SaturationError : public ParameterError {
 public:
  explicit SaturationError(const std::string& message)
      : ParameterError(message) {}
};

class UnsupportedDegreeError : public ParameterError {
 public:
  explicit UnsupportedDegreeError(const std::string& message)
      : ParameterError(message) {}
};

// Simulation would exceed the qubit or memory budget.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& message)
      : std::runtime_error(message) {}
};

// Post-selection onto a branch with zero amplitude.
class ImpossibleBranchError : public std::runtime_error {
 public:
  explicit ImpossibleBranchError(const std::string& message)
      : std::runtime_error(message) {}
};

// Some layer has success probability zero, so the expected cost diverges.
class DivergentCostError : public std::domain_error {
 public:
  explicit DivergentCostError(const std::string& message)
      : std::domain_error(message) {}
};

class InvalidLayerError : public std::logic_error {
 public:
  explicit InvalidLayerError(const std::string& message)
      : std::logic_error(message) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gausskit
