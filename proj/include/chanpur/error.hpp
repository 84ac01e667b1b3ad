// Copyright 2026 The chanpur Authors
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

#ifndef CHANPUR_ERROR_HPP
#define CHANPUR_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chanpur {

/// Base of every error thrown by the library. The CLI maps subclasses onto
/// distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together (matrix sizes, subsystem layouts).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value violates a documented invariant (probabilities, unit norms, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Parameters are well formed but describe a configuration we do not solve.
class UnsupportedConfigurationError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The signed branch combination is undefined because p+ == p-.
class UndefinedCombinationError : public Error {
 public:
  using Error::Error;
};

/// The measurement records do not determine the reconstruction.
class UnderdeterminedError : public Error {
 public:
  using Error::Error;
};

/// An iterative routine failed to produce a usable answer.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line == 0 ? what
                        : what + " (line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace chanpur

#endif  // CHANPUR_ERROR_HPP
