#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nodal {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two words or codes live in ambient spaces of different length.
class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t lhs, std::size_t rhs)
      : Error("length mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// Exhaustive enumeration refused because 2^k exceeds the configured cap.
class EnumerationLimit : public Error {
 public:
  EnumerationLimit(std::size_t dimension, std::size_t cap)
      : Error("refusing to enumerate 2^" + std::to_string(dimension) +
              " codewords: dimension exceeds cap of " + std::to_string(cap)),
        dimension_(dimension),
        cap_(cap) {}

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t dimension_;
  std::size_t cap_;
};

/// An argument lies outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The minimal-weight result is not established for this degree and parity.
class UnprovenCase : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed generator-matrix input. line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace nodal
