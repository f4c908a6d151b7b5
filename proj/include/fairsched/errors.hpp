#pragma once

#include <stdexcept>
#include <string>

namespace fairsched {

// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotEligibleError : Error {
  using Error::Error;
};
struct MissingGradeError : Error {
  using Error::Error;
};
struct AllZeroInterestError : Error {
  using Error::Error;
};
struct UnknownStudentError : Error {
  using Error::Error;
};
struct DuplicateNameError : Error {
  using Error::Error;
};
struct PartialAssignmentError : Error {
  using Error::Error;
};
struct PreconditionError : Error {
  using Error::Error;
};
struct UnsupportedConstraintError : Error {
  using Error::Error;
};
struct TooLargeError : Error {
  using Error::Error;
};
struct EmptyEligibilityError : Error {
  using Error::Error;
};
struct InfeasibleSpecError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};
struct SchemaError : Error {
  using Error::Error;
};

// Text parse failure with a 1-based source position.
struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& what, int line_, int column_)
      : Error(what + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

}  // namespace fairsched
