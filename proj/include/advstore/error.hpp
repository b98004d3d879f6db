#pragma once

#include <stdexcept>
#include <string>

namespace advstore {

enum class ErrorCode {
  TypeMismatch,
  CodeOutOfRange,
  InvalidCardinality,
  NonNumericColumn,
  EmptyColumn,
  CapacityExceeded,
  UnknownColumn,
  DeadRow,
  UnsortedBoundaries,
  DegenerateRange,
  ZeroVariance,
  DomainError,
  NotApplicable,
  DuplicateName,
  UnknownFeature,
  UnknownTable,
  ShapeMismatch,
  InvalidArgument,
  ParseError,
  SchemaMismatch,
  IoFailure,
  MismatchDetected,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace advstore
