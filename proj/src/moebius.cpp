#include "rootadj/moebius.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "rootadj/error.hpp"

namespace rootadj {

namespace {

constexpr double kPi = std::numbers::pi;

double rotation_angle_of(const IsometryMatrix& m) {
  double half = 0.5 * m.trace();
  double s = std::sqrt(std::max(0.0, 1.0 - half * half));
  double theta = 2.0 * std::atan2(m.c() >= 0 ? s : -s, half);
  if (theta <= -kPi) theta += 2.0 * kPi;
  if (theta > kPi) theta -= 2.0 * kPi;
  return theta;
}

Lorentz fixed_point_form(const IsometryMatrix& m) {
  return {m.c(), 0.5 * (m.a() - m.d()), -m.b()};
}

}  // namespace

char kind_letter(Kind k) {
  switch (k) {
    case Kind::Hyperbolic: return 'H';
    case Kind::Parabolic: return 'P';
    case Kind::Elliptic: return 'E';
    case Kind::Identity: return 'I';
  }
  return '?';
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Hyperbolic: return "hyperbolic";
    case Kind::Parabolic: return "parabolic";
    case Kind::Elliptic: return "elliptic";
    case Kind::Identity: return "identity";
  }
  return "unknown";
}

ElementClass classify(const IsometryMatrix& m, const Tolerances& tol) {
  ElementClass e;
  if (m.is_identity(tol.alg)) return e;
  double t = std::abs(m.trace());
  if (t > 2.0 + tol.cls) {
    e.kind = Kind::Hyperbolic;
    e.translation_length = 2.0 * std::acosh(0.5 * t);
  } else if (t >= 2.0 - tol.cls) {
    e.kind = Kind::Parabolic;
  } else {
    e.kind = Kind::Elliptic;
    e.rotation_angle = rotation_angle_of(m);
    RationalRecognition r = recognize_rational(e.rotation_angle / (2.0 * kPi), tol);
    if (r.value) e.finite_order = r.value->q;
    e.unresolved_order = r.unresolved;
  }
  return e;
}

IsometryMatrix rotation_with_angle(const IsometryMatrix& m, double angle, const Tolerances& tol) {
  ElementClass e = classify(m, tol);
  if (!e.is(Kind::Elliptic))
    throw Error(ErrorCode::InvalidArgument, "rotation_with_angle needs an elliptic element");
  double t = 0.5 * e.rotation_angle;
  Mat2 k = (m.raw() - Mat2{} * std::cos(t)) * (1.0 / std::sin(t));
  return IsometryMatrix(Mat2{} * std::cos(0.5 * angle) + k * std::sin(0.5 * angle));
}

IsometryMatrix nth_root(const IsometryMatrix& m, long n, const Tolerances& tol) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "root index must be positive");
  ElementClass e = classify(m, tol);
  if (e.is(Kind::Identity)) throw Error(ErrorCode::IdentityInput, "root of the identity");
  if (n == 1) return m;
  double half = 0.5 * m.trace();
  Mat2 centred = m.raw() - Mat2{} * half;
  switch (e.kind) {
    case Kind::Hyperbolic: {
      double u = std::acosh(half);
      Mat2 k = centred * (1.0 / std::sinh(u));
      return IsometryMatrix(Mat2{} * std::cosh(u / n) + k * std::sinh(u / n));
    }
    case Kind::Parabolic:
      return IsometryMatrix(Mat2{} + centred * (1.0 / n));
    case Kind::Elliptic:
      return rotation_with_angle(m, e.rotation_angle / n, tol);
    case Kind::Identity:
      break;
  }
  throw Error(ErrorCode::IdentityInput, "root of the identity");
}

IsometryMatrix rational_power(const IsometryMatrix& m, long s, long n, const Tolerances& tol) {
  if (s < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "exponent parts must be positive");
  long g = std::gcd(s, n);
  s /= g;
  n /= g;
  if (n == 1) {
    if (m.is_identity(tol.alg)) throw Error(ErrorCode::IdentityInput, "power of the identity");
    return m.pow(s);
  }
  return nth_root(m, n, tol).pow(s);
}

LineMatrixRep line_matrix(const IsometryMatrix& m, const Tolerances& tol) {
  if (m.is_identity(tol.alg)) throw Error(ErrorCode::IdentityInput, "line matrix of the identity");
  Mat2 raw = m.raw() - m.raw().adj();
  double scale = raw.max_abs();
  if (scale < tol.alg) throw Error(ErrorCode::DegenerateLineMatrix, "m - m^-1 vanishes");
  double pivot = raw.a;
  for (double v : {raw.b, raw.c, raw.d})
    if (std::abs(v) > std::abs(pivot)) pivot = v;
  return {raw * (1.0 / pivot), scale};
}

bool axes_perpendicular(const IsometryMatrix& f, const IsometryMatrix& g, const Tolerances& tol) {
  Mat2 lf = line_matrix(f, tol).m;
  Mat2 lg = line_matrix(g, tol).m;
  return std::abs((lg * lf).trace()) < tol.geo;
}

GeneralizedGeodesic axis_of(const IsometryMatrix& m, const Tolerances& tol) {
  ElementClass e = classify(m, tol);
  Lorentz x = fixed_point_form(m);
  switch (e.kind) {
    case Kind::Hyperbolic: return to_geodesic(x);
    case Kind::Parabolic: return to_boundary(x);
    case Kind::Elliptic: return InteriorPoint{to_interior(x)};
    case Kind::Identity: break;
  }
  throw Error(ErrorCode::IdentityInput, "axis of the identity");
}

RationalRecognition recognize_rational(double x, const Tolerances& tol) {
  RationalRecognition out;
  double ax = std::abs(x);
  long sign = x < 0 ? -1 : 1;
  double r = ax;
  long h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  bool near = false;
  out.residual = ax;
  for (int i = 0; i < 64; ++i) {
    double fl = std::floor(r);
    long a = static_cast<long>(fl);
    long h = a * h1 + h2;
    long k = a * k1 + k2;
    if (k > tol.max_denominator) break;
    double res = std::abs(ax - static_cast<double>(h) / static_cast<double>(k));
    out.residual = res;
    double kk = static_cast<double>(k) * static_cast<double>(k);
    if (res < tol.rational_residual && res < 1e-4 / kk) {
      out.value = Fraction{sign * h, k};
      out.unresolved = false;
      return out;
    }
    if (res < tol.rational_residual && res < 1e-3 / kk) near = true;
    double frac = r - fl;
    if (frac <= 0) break;
    r = 1.0 / frac;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
  }
  out.unresolved = near;
  return out;
}

bool is_primitive(const ElementClass& e, const Tolerances& tol) {
  if (!e.is(Kind::Elliptic)) throw Error(ErrorCode::InvalidArgument, "is_primitive needs an elliptic");
  RationalRecognition r = recognize_rational(e.rotation_angle / (2.0 * kPi), tol);
  if (r.unresolved)
    throw Error(ErrorCode::UnresolvedOrder, "rotation angle is near-rational beyond the denominator bound");
  if (!r.value) return false;
  return std::abs(r.value->p) == 1 && r.value->q >= 2;
}

}  // namespace rootadj
