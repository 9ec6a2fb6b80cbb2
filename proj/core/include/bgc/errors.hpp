// Copyright 2026 The bgclean Authors
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

#ifndef BGC_ERRORS_HPP_
#define BGC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace bgc {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid input: a cycle that is not in the graph, a self-loop,
// paths that do not share a root, and so on.
class MalformedInputError : public Error {
 public:
  using Error::Error;
};

// An exponential enumeration or an iterative loop hit its configured limit.
class LimitExceededError : public Error {
 public:
  using Error::Error;
};

// A post-condition that must hold by construction failed. Indicates an LP
// or oracle bug rather than bad input.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

// Instance-file syntax or semantic error. `line()` is 1-based, 0 if the error
// is not attached to a particular line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace bgc

#endif  // BGC_ERRORS_HPP_
