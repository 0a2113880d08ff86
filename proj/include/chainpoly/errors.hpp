#pragma once

#include <stdexcept>
#include <string>

namespace chainpoly {

// Base class for everything this library throws. Each rejectable condition
// gets its own type so callers can branch in catch clauses.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A set of cover pairs whose closure would contain a directed cycle.
struct CycleError : Error {
  using Error::Error;
};

// Input exceeds a configured size gate. The message names the gate.
struct SizeError : Error {
  using Error::Error;
};

// Longest-chain length of the input does not match the declared one.
struct DimensionError : Error {
  using Error::Error;
};

// Operation requires a pure complex and the input is not pure.
struct PurityError : Error {
  using Error::Error;
};

// Operation is undefined on an empty input.
struct EmptyError : Error {
  using Error::Error;
};

// Argument outside the documented domain.
struct RangeError : Error {
  using Error::Error;
};

// Malformed input file; carries the 1-based line number.
struct ParseError : Error {
  ParseError(int line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  int line;
};

}  // namespace chainpoly
