#pragma once

#include <stdexcept>
#include <string>

namespace optpath {

// Input that violates a documented precondition or schema.
struct ValidationError : std::invalid_argument {
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed config file; carries the offending line number.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// An iteration failed to converge.
struct NumericFailure : std::runtime_error {
  explicit NumericFailure(const std::string& what) : std::runtime_error(what) {}
};

// A Hamiltonian trajectory left the admissible state region.
struct Divergence : std::runtime_error {
  explicit Divergence(const std::string& what) : std::runtime_error(what) {}
};

// Shooting found no sign change over the supplied bracket or scan range.
struct NoBracket : std::runtime_error {
  explicit NoBracket(const std::string& what) : std::runtime_error(what) {}
};

// The conditioning event of a bridge has zero probability on the chain.
struct ZeroConditioningMass : std::runtime_error {
  explicit ZeroConditioningMass(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace optpath
