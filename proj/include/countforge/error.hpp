#ifndef COUNTFORGE_ERROR_HPP
#define COUNTFORGE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace countforge {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Two interpolation nodes share an x-coordinate.
class DuplicateNode : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured guard.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// The requested evaluation point is excluded by the procedure's hypotheses.
class UnsupportedPoint : public Error {
 public:
  using Error::Error;
};

// A weight-shift formula would divide by zero or is otherwise undefined.
class DegenerateShift : public Error {
 public:
  using Error::Error;
};

// A generated family failed its runtime postcondition.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

// The input broke a promise (e.g. "at most one satisfying assignment").
class PromiseViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace countforge

#endif  // COUNTFORGE_ERROR_HPP
