// jref :: error types

#ifndef JREF_ERRORS_HPP_
#define JREF_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jref {

  // Root of everything the library throws on purpose.
  class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
  };

  class ParseError : public Error {
  public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& detail() const noexcept { return detail_; }

  private:
    std::string detail_;
    std::size_t line_;
    std::size_t column_;
  };

  // A JSON document with the wrong layout.
  class FormatError : public Error {
  public:
    using Error::Error;
  };

  // A term where a formula is expected, or vice versa.
  class SortClash : public Error {
  public:
    using Error::Error;
  };

  class InvalidSubstitution : public Error {
  public:
    using Error::Error;
  };

  // Plain-mode unification was handed a v(...) node.
  class ModeViolation : public Error {
  public:
    using Error::Error;
  };

  class ResourceBound : public Error {
  public:
    using Error::Error;
  };

  class IndexOutOfRange : public Error {
  public:
    using Error::Error;
  };

  class EmptyProof : public Error {
  public:
    EmptyProof() : Error("proof has no lines") {}
  };

  class LimitExceeded : public Error {
  public:
    using Error::Error;
  };

  class MalformedCertificate : public Error {
  public:
    using Error::Error;
  };

  class SharpnessViolation : public Error {
  public:
    using Error::Error;
  };

  class NotInjective : public Error {
  public:
    using Error::Error;
  };

  // Raised when a guarantee the algorithms are supposed to establish does not hold.
  class InternalInvariantViolation : public Error {
  public:
    using Error::Error;
  };

} // namespace jref

#endif // JREF_ERRORS_HPP_
