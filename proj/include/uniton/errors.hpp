#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uniton {

// Errors raised on bad input. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char *kind() const noexcept { return "Error"; }
};

#define UNITON_ERROR(Name)                                               \
  class Name : public Error {                                            \
   public:                                                               \
    using Error::Error;                                                  \
    const char *kind() const noexcept override { return #Name; }         \
  };

UNITON_ERROR(DivisionByZero)
UNITON_ERROR(PoleAtPoint)
UNITON_ERROR(SizeMismatch)
UNITON_ERROR(InvalidType)
UNITON_ERROR(DegenerateDenominator)
UNITON_ERROR(UnknownType)
UNITON_ERROR(NotSkew)
UNITON_ERROR(NumericBreakdown)
UNITON_ERROR(DegenerateCurve)
UNITON_ERROR(TypeMismatch)
UNITON_ERROR(NotFull)
UNITON_ERROR(NotIsotropic)
UNITON_ERROR(EmptyGrid)
UNITON_ERROR(IoError)
UNITON_ERROR(SchemaError)

#undef UNITON_ERROR

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string &msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
  const char *kind() const noexcept override { return "SyntaxError"; }
  std::size_t position;
};

class DegenerateData : public Error {
 public:
  // index is the 1-based parameter index that failed, or 0 when the
  // condition is not tied to an indexed parameter.
  DegenerateData(const std::string &msg, int idx = 0)
      : Error(msg), index(idx) {}
  const char *kind() const noexcept override { return "DegenerateData"; }
  int index;
};

// Violations of statements that hold for every valid input. These signal a
// bug, and the CLI maps them to exit code 3.
class InternalAssertion : public std::logic_error {
 public:
  using std::logic_error::logic_error;
  virtual const char *kind() const noexcept { return "InternalAssertion"; }
};

class InconsistentBorder : public InternalAssertion {
 public:
  using InternalAssertion::InternalAssertion;
  const char *kind() const noexcept override { return "InconsistentBorder"; }
};

class NotInHPlus : public InternalAssertion {
 public:
  using InternalAssertion::InternalAssertion;
  const char *kind() const noexcept override { return "NotInHPlus"; }
};

}  // namespace uniton
