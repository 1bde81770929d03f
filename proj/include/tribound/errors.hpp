#pragma once

#include <stdexcept>
#include <string>

namespace tribound {

// Base class of every validation/domain error raised by the library.
// The CLI maps these to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidGeneratorError : Error {
  InvalidGeneratorError(const std::string& msg, int index_)
      : Error(msg), index(index_) {}
  int index;  // position of the offending generator in the input list
};

struct EmptyPresentationError : Error {
  using Error::Error;
};
struct ParityError : Error {
  using Error::Error;
};
struct RankError : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct DimensionMismatchError : Error {
  using Error::Error;
};
struct IndexError : Error {
  using Error::Error;
};
struct UnknownGroupError : Error {
  using Error::Error;
};
struct UnknownFieldError : Error {
  using Error::Error;
};
struct MissingParameterError : Error {
  using Error::Error;
};

// Raised by the algebra-file parser; positions are 1-based.
struct ParseError : Error {
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg), line(line_), column(column_) {}
  int line;
  int column;
};

struct DuplicateKeyError : ParseError {
  using ParseError::ParseError;
};

}  // namespace tribound
