// Copyright 2026 The infprob Authors
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
#include <utility>
#include <vector>

namespace infprob {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Standard part requested for a value that is not finite.
class InfiniteValue : public Error {
 public:
  InfiniteValue() : Error("value is infinite; it has no standard part") {}
};

class EmptyCondition : public Error {
 public:
  EmptyCondition() : Error("conditioning event is empty") {}
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class NotAPopperFunction : public Error {
 public:
  using Error::Error;
};

/// A model, table or stratified measure violates its structural invariants.
class InvalidModel : public Error {
 public:
  using Error::Error;
};

/// Exhaustive work requested beyond the configured size cap.
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed numeric or field-value text.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Malformed event expression. Carries the offending offset and the tokens
/// that would have been accepted there.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& found)
      : Error(format(position, expected, found)), position_(position), expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string format(std::size_t position, const std::vector<std::string>& expected,
                            const std::string& found) {
    std::string msg = "syntax error at position " + std::to_string(position) + ": found " + found +
                      ", expected one of {";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += ", ";
      msg += expected[i];
    }
    return msg + "}";
  }

  std::size_t position_;
  std::vector<std::string> expected_;
};

class UnboundAtom : public Error {
 public:
  explicit UnboundAtom(std::string label)
      : Error("unbound atom '" + label + "'"), label_(std::move(label)) {}

  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

}  // namespace infprob
