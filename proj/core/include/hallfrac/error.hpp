#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hallfrac {

enum class ErrorKind {
  ZeroDenominator,
  ParseError,
  InvalidOrder,
  NotAdjacent,
  NegativeFilling,
  InvalidLabel,
  InvalidArgument,
  CondensationRegion,
  NoClosedForm,
  Unbounded,
  InvalidOccupation,
  ExclusionViolation,
  TooManyPoints,
  ResolutionTooCoarse,
  DegenerateResolutions,
};

/// Stable name of an error kind, e.g. "CondensationRegion".
std::string_view to_string(ErrorKind kind) noexcept;

/// Domain error raised by every hallfrac operation. what() reads
/// "<Kind>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hallfrac
