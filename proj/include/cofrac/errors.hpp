#pragma once

#include <stdexcept>
#include <string>

namespace cofrac {

// Malformed input text (edge list, DIMACS, JSON certificate).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what) {}
};

// Instance exceeds a configured exact-computation limit.
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what)
      : std::runtime_error(what) {}
};

// A contract the solver relies on was violated; indicates a bug, never bad
// user input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cofrac
