// Copyright 2026 The Authors.
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

#ifndef EBASE_ERRORS_HPP_
#define EBASE_ERRORS_HPP_

#include <stdexcept>
#include <string>

#include "ebase/element_set.hpp"

namespace ebase {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied an argument that violates a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class GroundMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class CapacityExceeded : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NotClosed : public InvalidArgument {
 public:
  explicit NotClosed(ElementSet set, const std::string& what)
      : InvalidArgument(what), set_(set) {}
  ElementSet set() const { return set_; }

 private:
  ElementSet set_;
};

class NotComparable : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NotIntersectionClosed : public InvalidArgument {
 public:
  NotIntersectionClosed(ElementSet first, ElementSet second, const std::string& what)
      : InvalidArgument(what), first_(first), second_(second) {}
  ElementSet first() const { return first_; }
  ElementSet second() const { return second_; }

 private:
  ElementSet first_;
  ElementSet second_;
};

class MissingTop : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NotStandard : public InvalidArgument {
 public:
  NotStandard(int element, const std::string& what) : InvalidArgument(what), element_(element) {}
  int element() const { return element_; }

 private:
  int element_;
};

// A lattice-class precondition does not hold (e.g. join-semidistributivity).
class ClassPrecondition : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NotJoinSemidistributive : public ClassPrecondition {
 public:
  using ClassPrecondition::ClassPrecondition;
};

class NotGeometric : public ClassPrecondition {
 public:
  using ClassPrecondition::ClassPrecondition;
};

class CircuitAxiomViolation : public InvalidArgument {
 public:
  CircuitAxiomViolation(ElementSet first, ElementSet second, const std::string& what)
      : InvalidArgument(what), first_(first), second_(second) {}
  ElementSet first() const { return first_; }
  ElementSet second() const { return second_; }

 private:
  ElementSet first_;
  ElementSet second_;
};

class LabelCollision : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column),
        message_(message) {}
  int line() const { return line_; }
  int column() const { return column_; }
  // The message without the position prefix.
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

// Two computations that must agree did not, or a proven invariant failed.
// Always a bug, never a property of the input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ebase

#endif  // EBASE_ERRORS_HPP_
