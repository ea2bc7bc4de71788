#pragma once

#include <stdexcept>
#include <string>

namespace mll {

enum class ErrorCode {
  ExponentMismatch,
  Overflow,
  NonUnimodular,
  NotAffine,
  NotConstant,
  NonPositiveField,
  QuadratureUnderresolved,
  InconsistentCocycle,
  GridTooCoarse,
  InvalidArgument,
  Parse,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mll
