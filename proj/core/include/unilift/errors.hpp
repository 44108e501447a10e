#pragma once

#include <stdexcept>
#include <string>

namespace unilift {

// Shapes that do not fit together (non-square input, mixed dimensions).
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A parameter lies outside the supported range (dimension caps, indices).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// An argument violates an operation's precondition (zero vertex, singular basis).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact arithmetic would have left the 64-bit range.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// A search gave up before finishing. Never a statement about existence.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Raised when a self-check inside the library fails; indicates a bug.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace unilift
