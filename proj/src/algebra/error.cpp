#include "algebra/error.hpp"

namespace invfield {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::SubstitutionPole: return "SubstitutionPole";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
    case ErrorCode::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorCode::NeedsCycloField: return "NeedsCycloField";
    case ErrorCode::CertificateFailure: return "CertificateFailure";
    case ErrorCode::IdentityFailure: return "IdentityFailure";
    case ErrorCode::PoleAtParameters: return "PoleAtParameters";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::NoUsablePrimes: return "NoUsablePrimes";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::NotProvided: return "NotProvided";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace invfield
