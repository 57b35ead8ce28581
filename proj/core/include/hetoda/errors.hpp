#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hetoda {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the expression parser; position is a byte offset into the source.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected)
      : Error("syntax error at position " + std::to_string(position) +
              ": expected " + expected),
        position(position),
        expected(std::move(expected)) {}
  std::size_t position;
  std::string expected;
};

// Raised when expression evaluation hits sqrt of a negative number or a
// division by zero; carries the first offending sample coordinates.
class EvalDomainError : public Error {
 public:
  EvalDomainError(std::string op, double x, double y)
      : Error("domain error in '" + op + "' at sample (x=" + std::to_string(x) +
              ", y=" + std::to_string(y) + ")"),
        op(std::move(op)),
        x(x),
        y(y) {}
  std::string op;
  double x, y;
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error(what) {}
};

// Exponent in e^{(v,xi)} left the representable range.  Evaluation aborts
// rather than saturating; the caller (line search, scan) decides what to do.
class OverflowError : public Error {
 public:
  OverflowError(int pair_index, double max_exponent)
      : Error("exponential overflow on active pair #" +
              std::to_string(pair_index) +
              " (max exponent " + std::to_string(max_exponent) + ")"),
        pair_index(pair_index),
        max_exponent(max_exponent) {}
  int pair_index;
  double max_exponent;
};

class SolverError : public Error {
 public:
  explicit SolverError(const std::string& what) : Error(what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

// Configuration file problem; line is 1-based, 0 when not tied to a line.
class ConfigError : public Error {
 public:
  ConfigError(std::size_t line, const std::string& what)
      : Error(line ? ("config line " + std::to_string(line) + ": " + what)
                   : ("config: " + what)),
        line(line) {}
  std::size_t line;
};

}  // namespace hetoda
