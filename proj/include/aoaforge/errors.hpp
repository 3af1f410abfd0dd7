#pragma once

#include <stdexcept>
#include <string>

namespace aoaforge {

// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed schedule-table text. `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Input graph or table violates a documented contract.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Misuse of the graph API (unknown code, query on a cyclic graph, ...).
class GraphError : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed. A conversion that trips this produced a
// network the built-in oracle refused to certify; callers should treat it
// as a bug, not as bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace aoaforge
