#include "rootadj/points.hpp"

#include <cmath>
#include <limits>

namespace rootadj {

BoundaryPoint BoundaryPoint::real(double x) { return homogeneous(x, 1.0); }

BoundaryPoint BoundaryPoint::homogeneous(double u, double v) {
  double n = std::hypot(u, v);
  u /= n;
  v /= n;
  if (v < 0 || (v == 0 && u < 0)) {
    u = -u;
    v = -v;
  }
  if (v == 0) u = 1;
  return {u, v};
}

double BoundaryPoint::value() const {
  if (v == 0) return std::numeric_limits<double>::infinity();
  return u / v;
}

double chordal(const BoundaryPoint& x, const BoundaryPoint& y) {
  return 2.0 * std::abs(x.u * y.v - x.v * y.u);
}

ProperGeodesic geodesic(double p, double q) {
  auto pt = [](double x) {
    return std::isinf(x) ? BoundaryPoint::infinity() : BoundaryPoint::real(x);
  };
  return {pt(p), pt(q)};
}

double inner(const Lorentz& x, const Lorentz& y) {
  return 2.0 * x.b * y.b - x.a * y.c - x.c * y.a;
}

Lorentz orthogonal_to(const Lorentz& x, const Lorentz& y) {
  Lorentz p{-x.c, 2.0 * x.b, -x.a};
  Lorentz q{-y.c, 2.0 * y.b, -y.a};
  return {p.b * q.c - p.c * q.b, p.c * q.a - p.a * q.c, p.a * q.b - p.b * q.a};
}

Lorentz point_vector(const Complex& z) { return {1.0, z.real(), std::norm(z)}; }

Lorentz point_vector(const BoundaryPoint& p) { return {p.v * p.v, p.u * p.v, p.u * p.u}; }

Lorentz line_normal(const ProperGeodesic& g) {
  const auto& p = g.p;
  const auto& q = g.q;
  double d = p.u * q.v - p.v * q.u;
  Lorentz x{2.0 * p.v * q.v, p.u * q.v + p.v * q.u, 2.0 * p.u * q.u};
  double k = (d > 0 ? -1.0 : 1.0) / (std::sqrt(2.0) * std::abs(d));
  return x * k;
}

Complex to_interior(const Lorentz& x0) {
  Lorentz x = x0.a < 0 ? x0 * -1.0 : x0;
  double y2 = (x.a * x.c - x.b * x.b) / (x.a * x.a);
  return {x.b / x.a, std::sqrt(std::max(y2, 0.0))};
}

BoundaryPoint to_boundary(const Lorentz& x0) {
  Lorentz x = x0.a + x0.c < 0 ? x0 * -1.0 : x0;
  if (x.a >= x.c) return BoundaryPoint::homogeneous(x.b, x.a);
  return BoundaryPoint::homogeneous(x.c, x.b);
}

ProperGeodesic to_geodesic(const Lorentz& x) {
  double s = std::sqrt(std::max(x.b * x.b - x.a * x.c, 0.0));
  double q0 = x.b >= 0 ? x.b + s : x.b - s;
  ProperGeodesic g{BoundaryPoint::homogeneous(q0, x.a), BoundaryPoint::homogeneous(x.c, q0)};
  Lorentz n = line_normal(g);
  if (n.a * x.a + n.b * x.b + n.c * x.c < 0) g = g.reversed();
  return g;
}

double hyperbolic_distance(const Complex& z, const Complex& w) {
  return 2.0 * std::asinh(std::abs(z - w) / (2.0 * std::sqrt(z.imag() * w.imag())));
}

double signed_distance(const ProperGeodesic& g, const Complex& z) {
  return std::asinh(inner(line_normal(g), point_vector(z)) / (std::sqrt(2.0) * z.imag()));
}

double position_along(const ProperGeodesic& g, const Complex& z) {
  return std::log(std::abs(g.p.v * z - g.p.u)) - std::log(std::abs(g.q.v * z - g.q.u));
}

double position_along(const ProperGeodesic& g, const BoundaryPoint& x) {
  double num = std::abs(g.p.v * x.u - g.p.u * x.v);
  double den = std::abs(g.q.v * x.u - g.q.u * x.v);
  return std::log(num) - std::log(den);
}

Complex reflect(const ProperGeodesic& g, const Complex& z) {
  Lorentz n = line_normal(g);
  Lorentz p = point_vector(z);
  return to_interior(p - n * (2.0 * inner(p, n)));
}

}  // namespace rootadj
