#include "rootadj/tolerances.hpp"

#include <cstdlib>
#include <string>

#include "rootadj/error.hpp"

namespace rootadj {

Tolerances Tolerances::scaled(double k) const {
  Tolerances t = *this;
  t.alg *= k;
  t.cls *= k;
  t.geo *= k;
  t.vertex *= k;
  t.rational_residual *= k;
  return t;
}

Tolerances Tolerances::from_environment() {
  const char* raw = std::getenv("ROOTADJ_TOLERANCE_SCALE");
  if (raw == nullptr || *raw == '\0') return Tolerances{};
  char* end = nullptr;
  double k = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(k > 0.0))
    throw Error(ErrorCode::ValidationError,
                std::string("ROOTADJ_TOLERANCE_SCALE must be a positive number, got '") + raw + "'");
  return Tolerances{}.scaled(k);
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IdentityInput: return "IdentityInput";
    case ErrorCode::NumericalDegeneracy: return "NumericalDegeneracy";
    case ErrorCode::DegenerateLineMatrix: return "DegenerateLineMatrix";
    case ErrorCode::UnresolvedOrder: return "UnresolvedOrder";
    case ErrorCode::CoincidentLines: return "CoincidentLines";
    case ErrorCode::NotAnInvolution: return "NotAnInvolution";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::NoPerpendicular: return "NoPerpendicular";
    case ErrorCode::IntersectingAxes: return "IntersectingAxes";
    case ErrorCode::ElementaryGroup: return "ElementaryGroup";
    case ErrorCode::NotStoppingInput: return "NotStoppingInput";
    case ErrorCode::GeometryViolation: return "GeometryViolation";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

}  // namespace rootadj
