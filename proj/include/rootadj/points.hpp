#pragma once

#include <complex>
#include <variant>

namespace rootadj {

using Complex = std::complex<double>;

// Point of R u {inf} as a homogeneous unit vector (u:v) meaning u/v.
// Canonical sign: v > 0, or v == 0 and u == 1 (the point at infinity).
struct BoundaryPoint {
  double u = 1, v = 0;

  static BoundaryPoint real(double x);
  static BoundaryPoint infinity() { return {}; }
  static BoundaryPoint homogeneous(double u, double v);

  bool is_infinity() const { return v == 0; }
  // u/v, or +inf.
  double value() const;
};

// Chordal distance between the images on the unit circle under the Cayley map.
double chordal(const BoundaryPoint& x, const BoundaryPoint& y);

struct InteriorPoint {
  Complex z{0, 1};
};

// Oriented geodesic from p to q.
struct ProperGeodesic {
  BoundaryPoint p, q;
  ProperGeodesic reversed() const { return {q, p}; }
};

using GeneralizedGeodesic = std::variant<ProperGeodesic, BoundaryPoint, InteriorPoint>;

ProperGeodesic geodesic(double p, double q);

// Lorentz line coordinates. A vector (A,B,C) stands for the quadratic form
// A u^2 - 2B uv + C v^2 on homogeneous boundary coordinates, with bilinear form
// <X,Y> = 2 B1 B2 - A1 C2 - C1 A2. Points of the half-plane are timelike,
// boundary points null, geodesics spacelike; incidence is orthogonality.
struct Lorentz {
  double a = 0, b = 0, c = 0;

  Lorentz operator+(const Lorentz& o) const { return {a + o.a, b + o.b, c + o.c}; }
  Lorentz operator-(const Lorentz& o) const { return {a - o.a, b - o.b, c - o.c}; }
  Lorentz operator*(double k) const { return {a * k, b * k, c * k}; }
};

double inner(const Lorentz& x, const Lorentz& y);
// The vector orthogonal to both arguments.
Lorentz orthogonal_to(const Lorentz& x, const Lorentz& y);

Lorentz point_vector(const Complex& z);
Lorentz point_vector(const BoundaryPoint& p);
// Unit spacelike normal; <N, P> > 0 exactly on the right of p -> q.
Lorentz line_normal(const ProperGeodesic& g);

// Inverse maps. timelike -> interior point, null -> boundary point.
Complex to_interior(const Lorentz& x);
BoundaryPoint to_boundary(const Lorentz& x);
// Spacelike vector -> geodesic whose line_normal is a positive multiple of x.
ProperGeodesic to_geodesic(const Lorentz& x);

double hyperbolic_distance(const Complex& z, const Complex& w);
// Signed distance from z to g, positive on the right.
double signed_distance(const ProperGeodesic& g, const Complex& z);
// Coordinate along oriented g of the foot of z (or of a boundary point, possibly +-inf).
double position_along(const ProperGeodesic& g, const Complex& z);
double position_along(const ProperGeodesic& g, const BoundaryPoint& x);

// Reflection of a point across g.
Complex reflect(const ProperGeodesic& g, const Complex& z);

}  // namespace rootadj
