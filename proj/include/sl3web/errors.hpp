#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sl3web {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ill-typed composition: the inner boundary strings of a Compose node differ.
struct TypeMismatchError : Error {
  explicit TypeMismatchError(const std::string& msg, std::string subword = {},
                             std::size_t begin = 0, std::size_t end = 0)
      : Error(msg), offending_subword(std::move(subword)), span_begin(begin), span_end(end) {}
  std::string offending_subword;
  std::size_t span_begin;  // byte offsets into the parsed text, when known
  std::size_t span_end;
};

struct BoundaryMismatchError : Error {
  using Error::Error;
};

struct SignatureMismatchError : Error {
  using Error::Error;
};

struct NotClosedError : Error {
  using Error::Error;
};

struct NotALinkError : Error {
  using Error::Error;
};

struct MissingImageError : Error {
  using Error::Error;
};

struct TooManyCrossingsError : Error {
  using Error::Error;
};

struct NonterminatingReductionError : Error {
  using Error::Error;
};

// A structural invariant of the planar map failed; carries a diagnostic dump.
struct MapInvariantError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t pos) : Error(msg), position(pos) {}
  std::size_t position;
};

struct UnknownGeneratorError : ParseError {
  using ParseError::ParseError;
};

}  // namespace sl3web
