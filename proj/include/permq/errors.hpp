// Copyright 2026 permq contributors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace permq {

/// A surviving linear or quadratic coefficient came out fractional, which
/// signals a mis-weighted expression.
struct NonIntegerCoefficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input text could not be parsed; carries the 1-based line number.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/// A bit/spin vector does not satisfy its encoding scheme.
struct NotAValidVector : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An exhaustive operation was asked to exceed its enumeration cap.
struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A QUBO-only or Ising-only operation received the other kind.
struct KindMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace permq
