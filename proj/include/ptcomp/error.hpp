#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptcomp {

// Base class for every error the library reports. Subclasses map onto the
// CLI exit codes, so callers can catch by category.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list text. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Input that parses but is not acceptable (self-loops, bad ids, bad p values).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A supplied edge ordering is not a permutation of the graph's edge set.
class InvalidOrdering : public Error {
 public:
  using Error::Error;
};

// A compressed graph is not a subgraph of its source.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// An instance exceeds a configured size guard (LP caps, brute-force guard,
// generator capacity).
class SizeError : public Error {
 public:
  using Error::Error;
};

// The LP solver could not produce an optimal solution.
class SolverError : public Error {
 public:
  using Error::Error;
};

// A compression failed its own verification. Always a bug.
class SoundnessError : public Error {
 public:
  using Error::Error;
};

}  // namespace ptcomp
