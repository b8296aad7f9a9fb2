#pragma once

#include <optional>
#include <string>

#include "rootadj/matrix.hpp"
#include "rootadj/points.hpp"
#include "rootadj/tolerances.hpp"

namespace rootadj {

enum class Kind { Hyperbolic, Parabolic, Elliptic, Identity };

struct ElementClass {
  Kind kind = Kind::Identity;
  double translation_length = 0;  // Hyperbolic only
  double rotation_angle = 0;      // Elliptic only, in (-pi, pi]
  std::optional<long> finite_order;
  bool unresolved_order = false;

  bool is(Kind k) const { return kind == k; }
};

char kind_letter(Kind k);  // 'H', 'P', 'E', 'I'
std::string to_string(Kind k);

ElementClass classify(const IsometryMatrix& m, const Tolerances& tol = {});

IsometryMatrix nth_root(const IsometryMatrix& m, long n, const Tolerances& tol = {});
IsometryMatrix rational_power(const IsometryMatrix& m, long s, long n, const Tolerances& tol = {});
// Elliptic power by an explicit rotation angle, keeping the fixed point of m.
IsometryMatrix rotation_with_angle(const IsometryMatrix& m, double angle, const Tolerances& tol = {});

// Traceless matrix m - m^{-1}, scaled so the largest-magnitude entry is +1.
struct LineMatrixRep {
  Mat2 m;
  double scale = 1;  // max-abs entry of the unnormalized matrix
};

LineMatrixRep line_matrix(const IsometryMatrix& m, const Tolerances& tol = {});
bool axes_perpendicular(const IsometryMatrix& f, const IsometryMatrix& g, const Tolerances& tol = {});

GeneralizedGeodesic axis_of(const IsometryMatrix& m, const Tolerances& tol = {});

struct Fraction {
  long p = 0, q = 1;
};

struct RationalRecognition {
  std::optional<Fraction> value;
  bool unresolved = false;
  double residual = 0;  // |x - p/q| for the best convergent examined
};

RationalRecognition recognize_rational(double x, const Tolerances& tol = {});

// Throws UnresolvedOrder for near-rational angles that cannot be settled.
bool is_primitive(const ElementClass& e, const Tolerances& tol = {});

}  // namespace rootadj
