#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latticebound {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes of matrices/vectors/points do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Singular matrix or affinely dependent vertices.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

class RankError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a function (e.g. sylvester(0)).
class DomainError : public Error {
 public:
  using Error::Error;
};

class HullMembershipError : public Error {
 public:
  using Error::Error;
};

/// A bound or certificate was requested where its hypotheses fail.
class ApplicabilityError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ValidityError : public Error {
 public:
  using Error::Error;
};

/// Halfspace system does not describe a bounded region.
class UnboundedError : public Error {
 public:
  using Error::Error;
};

/// A checked theorem instance or internal cross-check failed.
class VerificationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DataIntegrityError : public Error {
 public:
  using Error::Error;
};

/// Two census records are unimodularly equivalent.
class DuplicateRecordError : public DataIntegrityError {
 public:
  using DataIntegrityError::DataIntegrityError;
};

}  // namespace latticebound
