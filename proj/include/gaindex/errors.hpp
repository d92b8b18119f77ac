#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gaindex {

/// Malformed textual input. `offset` is the byte offset (or line number for
/// line-oriented formats, see `line`) of the first offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0)
      : std::runtime_error(what), offset_(offset), line_(line) {}

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t offset_;
  std::size_t line_;
};

/// Graph input that violates the structural preconditions of an operation
/// (self-loops, out-of-range vertices, missing edges).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Graph has a component that the standing assumptions forbid: an edgeless
/// component for index computations, a single-edge component for line graphs.
class StandingAssumptionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A size guard was exceeded (canonical form, enumeration, constructions).
class LimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace gaindex
