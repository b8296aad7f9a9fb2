#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "rootadj/verifier.hpp"

namespace rootadj {

using Json = nlohmann::ordered_json;

// Matrices as [a, b, c, d]; boundary points as numbers or "inf".
Json to_json(const IsometryMatrix& m);
Json to_json(const BoundaryPoint& p);
Json to_json(const GeneralizedGeodesic& g);
Json to_json(const ElementClass& c);
Json to_json(const HexagonConfig& h);
Json to_json(const StoppingResult& s);
Json to_json(const RootLineFan& f);
Json to_json(const Verdict& v);
Json to_json(const WordWitness& w);
Json to_json(const RegionCertificate& c);
Json to_json(const CrossCheckReport& r);

// Normalizes to determinant 1; `field` names the value in errors.
IsometryMatrix matrix_from_json(const Json& j, const std::string& field);

struct RootSpec {
  Role role = Role::B;
  long num = 1, den = 1;
};

struct ToleranceOverrides {
  std::optional<double> alg, cls, geo, vertex, rational_residual;
  std::optional<long> max_denominator;

  Tolerances apply(Tolerances base) const;
};

struct GroupSpec {
  IsometryMatrix a, b;
  std::optional<RootSpec> root;
  std::optional<ToleranceOverrides> tolerances;
};

// Throws ParseError (with line and column) or ValidationError (naming the field).
GroupSpec parse_group_spec(const std::string& text);
Json to_json(const GroupSpec& g);
// Generators compared up to sign within eps.
bool equivalent(const GroupSpec& x, const GroupSpec& y, double eps);

}  // namespace rootadj
