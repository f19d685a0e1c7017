#pragma once

#include <stdexcept>
#include <string>

namespace clgen {

enum class ErrorCode {
  NonPrime,
  DegreeTooLarge,
  NoPrimitivePolynomial,
  DivisionByZero,
  FieldMismatch,
  OrderUnavailable,
  DegenerateY,
  EpsilonIsOne,
  TooLarge,
  InternalMismatch,
  RequiresSpecialization,
  ArityMismatch,
  BadCharacteristic,
  HypothesisNotMet,
  Parse,
};

const char* error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code)
  {
  }

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace clgen
