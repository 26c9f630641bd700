#include "parinv/error.hpp"

namespace parinv {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadComposition: return "BadComposition";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::RootNotInM: return "RootNotInM";
    case ErrorCode::RootNotInT: return "RootNotInT";
    case ErrorCode::DuplicatePhi: return "DuplicatePhi";
    case ErrorCode::LeavesNilradical: return "LeavesNilradical";
    case ErrorCode::MissingAssignment: return "MissingAssignment";
    case ErrorCode::DegenerateOrbit: return "DegenerateOrbit";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NonMonomialDenominator: return "NonMonomialDenominator";
  }
  return "Unknown";
}

}  // namespace parinv
