#pragma once

#include <stdexcept>
#include <string>

namespace rootadj {

enum class ErrorCode {
  IdentityInput,
  NumericalDegeneracy,
  DegenerateLineMatrix,
  UnresolvedOrder,
  CoincidentLines,
  NotAnInvolution,
  NotDisjoint,
  NoPerpendicular,
  IntersectingAxes,
  ElementaryGroup,
  NotStoppingInput,
  GeometryViolation,
  BudgetExceeded,
  InvalidArgument,
  ParseError,
  ValidationError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rootadj
