#pragma once

#include <stdexcept>
#include <string>

namespace tapes {

/** Base class for every error thrown by this library. */
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** Syntax error in signature, circuit, tape, CR or JSON text. */
struct ParseError : Error {
  int line = 0;
  int col = 0;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

/** Ill-typed term: mismatched composition, unknown generator, etc. */
struct TypeError : Error {
  using Error::Error;
};

/** Operation not available in the current mode (e.g. order queries in
 * multiset mode, Frobenius generators without frobenius_enabled). */
struct ModeError : Error {
  using Error::Error;
};

/** Malformed or incomplete relational interpretation. */
struct ModelError : Error {
  using Error::Error;
};

}  // namespace tapes
