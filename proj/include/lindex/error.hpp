// Copyright 2026 The lindex Authors
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

#ifndef LINDEX_ERROR_HPP
#define LINDEX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lindex {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph or code text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  enum class Kind {
    kMalformedHeader,
    kMalformedArc,
    kEndpointOutOfRange,
    kSelfLoop,
    kDuplicateArc,
    kArcCountMismatch,
    kMalformedDocument,
  };

  ParseError(Kind kind, int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        kind_(kind),
        line_(line) {}

  Kind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }

 private:
  Kind kind_;
  int line_;
};

/// An exhaustive oracle was asked to run past its size guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Cycle enumeration hit its cap before the answer could be trusted.
class TruncatedEnumeration : public Error {
 public:
  using Error::Error;
};

/// A step of the configuration pipeline found a structure that the
/// construction rules out. Always indicates a bug or an unproven corner.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Encoding was requested for a graph needing three or more removals.
class UnsupportedRemovalNumber : public Error {
 public:
  using Error::Error;
};

}  // namespace lindex

#endif  // LINDEX_ERROR_HPP
