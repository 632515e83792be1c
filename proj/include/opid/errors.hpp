#pragma once

#include <stdexcept>
#include <string>

namespace opid {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two values from different free algebras were combined.
struct AlphabetMismatch : Error {
  AlphabetMismatch() : Error("alphabet mismatch") {}
  explicit AlphabetMismatch(const std::string& what) : Error(what) {}
};

// rewrite_step was asked to act where no monomial of g occurs in f.
struct NoMatchingOccurrence : Error {
  NoMatchingOccurrence() : Error("no matching occurrence for rewriting step") {}
};

// A matrix in a quiver representation has the wrong shape.
struct ShapeError : Error {
  using Error::Error;
};

// realize() was asked for a signature outside sigma(f).
struct SignatureNotAdmitted : Error {
  SignatureNotAdmitted() : Error("signature not admitted by the polynomial") {}
};

// Syntax or semantic error in an input file, with 1-based position.
struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg + " at line " + std::to_string(line_) + ", column " +
              std::to_string(column_)),
        line(line_),
        column(column_) {}
};

}  // namespace opid
