#include "hallfrac/error.hpp"

namespace hallfrac {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::NotAdjacent: return "NotAdjacent";
    case ErrorKind::NegativeFilling: return "NegativeFilling";
    case ErrorKind::InvalidLabel: return "InvalidLabel";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::CondensationRegion: return "CondensationRegion";
    case ErrorKind::NoClosedForm: return "NoClosedForm";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::InvalidOccupation: return "InvalidOccupation";
    case ErrorKind::ExclusionViolation: return "ExclusionViolation";
    case ErrorKind::TooManyPoints: return "TooManyPoints";
    case ErrorKind::ResolutionTooCoarse: return "ResolutionTooCoarse";
    case ErrorKind::DegenerateResolutions: return "DegenerateResolutions";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace hallfrac
