#pragma once

#include <stdexcept>
#include <string>

namespace qhopf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Elements over different generator alphabets were mixed.
struct AlphabetError : Error {
  using Error::Error;
};

/// Invalid construction parameter (n too small, bad index, ...).
struct ParameterError : Error {
  using Error::Error;
};

/// A rewrite rule whose right-hand side is not smaller than its left word.
struct OrientationError : Error {
  using Error::Error;
};

/// A cocycle was evaluated on a generator with no direct or derivable value.
struct UnderdeterminedError : Error {
  using Error::Error;
};

/// Generating set is not closed under the involution modulo relations.
struct ClosureError : Error {
  using Error::Error;
};

/// Degree-related refusal (degree of zero, uncertified truncation bound).
struct DegreeError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg + " at line " + std::to_string(line_) + ", column " +
              std::to_string(column_)),
        line(line_),
        column(column_) {}
};

}  // namespace qhopf
