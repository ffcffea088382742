#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gltm {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (Newick, CSV, quartet strings).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Violated precondition: bad arguments, label mismatches, out-of-range weights.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Numerical failure: non-PSD input, singular or near-singular systems.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gltm
