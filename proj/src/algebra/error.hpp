#pragma once

#include <stdexcept>
#include <string>

namespace invfield {

enum class ErrorCode {
  DivisionByZero,
  AmbientMismatch,
  UnknownVariable,
  NotDivisible,
  SubstitutionPole,
  PoleAtPoint,
  ArityMismatch,
  DegreeMismatch,
  ClosureBudgetExceeded,
  WrongCharacteristic,
  NeedsCycloField,
  CertificateFailure,
  IdentityFailure,
  PoleAtParameters,
  NotSquarefree,
  NoUsablePrimes,
  ExponentOverflow,
  ParseError,
  InvalidArgument,
  RetriesExhausted,
  NotProvided,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(error_code_name(code)) + ": " + what);
}

}  // namespace invfield
