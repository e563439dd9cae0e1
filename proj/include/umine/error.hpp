// Copyright 2026 The umine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
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

namespace umine {

/// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. line is 1-based; column is 1-based, 0 = whole line.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column = 0)
      : Error(msg + " (line " + std::to_string(line) +
              (column ? ", column " + std::to_string(column) : std::string()) +
              ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parameter outside its documented domain.
class ParamError : public Error {
 public:
  using Error::Error;
};

/// Instance too large for an intentionally bounded routine.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Filesystem-level failure (open/read/write).
class IoError : public Error {
 public:
  using Error::Error;
};

/// Internal invariant violated; indicates a bug, not bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A deadline expired inside a miner. Carries no state; the harness records
/// elapsed time itself.
class TimeoutError : public Error {
 public:
  using Error::Error;
};

}  // namespace umine
