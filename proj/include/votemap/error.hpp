#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace votemap {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mismatched sizes between rankings, matrices or vectors.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A value outside the domain of an operation (bad probability, alpha, phi...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed GS tree or other structural input.
class StructureError : public Error {
 public:
  using Error::Error;
};

// Requested size exceeds a documented computational cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Dimension that an operation does not define (odd m for ST/AN).
class UnsupportedDimensionError : public Error {
 public:
  using Error::Error;
};

// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Text input that cannot be parsed. Carries the 1-based line number (0 if unknown).
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input in a format we do not support (ties, partial orders).
class UnsupportedFormatError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace votemap
