#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace parinv {

enum class ErrorCode {
  BadComposition,
  BadInput,
  RootNotInM,
  RootNotInT,
  DuplicatePhi,
  LeavesNilradical,
  MissingAssignment,
  DegenerateOrbit,
  NotInvariant,
  NonMonomialDenominator,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this exception; `code()` is the
// machine-readable part that the CLI forwards.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace parinv
