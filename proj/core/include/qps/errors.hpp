#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qps {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph file or literal. line() is 1-based; 0 means "no specific line".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A configured size cap (edges, vertices, coordinates) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Input violates an operation's precondition (zero weight, disconnected graph, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class CrossCheckFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace qps
