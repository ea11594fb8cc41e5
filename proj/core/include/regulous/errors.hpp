#pragma once

#include <stdexcept>
#include <string>

namespace regulous {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mixing values over different variable lists is always a bug in the caller:
// chart coordinates must never silently alias base coordinates.
struct VariableMismatch : Error {
  explicit VariableMismatch(const std::string& msg) : Error(msg) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

// Exact evaluation at a zero of the denominator.
struct PoleError : Error {
  explicit PoleError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
        line(line_), col(col_) {}
  int line;
  int col;
};

// A construction step left the supported fragment (non-rational center,
// exhausted blowup/exponent budget, inapplicable case of an algorithm).
struct ConstructionError : Error {
  explicit ConstructionError(const std::string& msg) : Error(msg) {}
};

}  // namespace regulous
