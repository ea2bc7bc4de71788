#include "mll/error.hpp"

namespace mll {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ExponentMismatch: return "ExponentMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NonUnimodular: return "NonUnimodular";
    case ErrorCode::NotAffine: return "NotAffine";
    case ErrorCode::NotConstant: return "NotConstant";
    case ErrorCode::NonPositiveField: return "NonPositiveField";
    case ErrorCode::QuadratureUnderresolved: return "QuadratureUnderresolved";
    case ErrorCode::InconsistentCocycle: return "InconsistentCocycle";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace mll
