// Copyright 2026 The Hyperc Authors
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

#ifndef HYPERC_ERROR_HPP_
#define HYPERC_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperc {

/// Base class for every error raised by the library. The message always names
/// the violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different alphabets or universes.
class AlphabetMismatch : public Error {
 public:
  AlphabetMismatch() : Error("alphabet mismatch") {}
  explicit AlphabetMismatch(const std::string& what) : Error(what) {}
};

/// An io signature does not fit the operation (shared outputs, containment).
class SignatureError : public Error {
 public:
  using Error::Error;
};

/// A value failed validation (not prefix-closed, not receptive, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation is undefined for its operands (quotient definedness).
class UndefinedOperation : public Error {
 public:
  using Error::Error;
};

/// A configured size bound was exceeded.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Upper bound on the number of states any product or subset construction
/// may create. Read once from HYPERC_MAX_STATES, default 10000.
std::size_t max_product_states();

/// Overrides the bound for the current process (tests, CLI).
void set_max_product_states(std::size_t limit);

}  // namespace hyperc

#endif  // HYPERC_ERROR_HPP_
