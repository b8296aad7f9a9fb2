#include "rootadj/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rootadj/error.hpp"

namespace rootadj {

double Mat2::max_abs() const {
  return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

IsometryMatrix::IsometryMatrix(double a, double b, double c, double d)
    : IsometryMatrix(Mat2{a, b, c, d}) {}

IsometryMatrix::IsometryMatrix(const Mat2& m) : m_(m) {
  double det = m.det();
  if (!(det > 0.0) || !std::isfinite(det))
    throw Error(ErrorCode::ValidationError,
                "matrix determinant must be positive (got " + std::to_string(det) + ")");
  m_ = m * (1.0 / std::sqrt(det));
  canonicalize();
}

void IsometryMatrix::canonicalize() {
  double t = m_.a + m_.d;
  bool flip;
  if (std::abs(t) > Tolerances{}.alg) {
    flip = t < 0;
  } else {
    double first = m_.a != 0 ? m_.a : m_.b != 0 ? m_.b : m_.c != 0 ? m_.c : m_.d;
    flip = first < 0;
  }
  if (flip) m_ = m_ * -1.0;
}

IsometryMatrix IsometryMatrix::inverse() const { return IsometryMatrix(m_.adj(), Trusted{}); }

IsometryMatrix IsometryMatrix::operator*(const IsometryMatrix& o) const {
  return IsometryMatrix(m_ * o.m_, Trusted{});
}

IsometryMatrix IsometryMatrix::pow(long k) const {
  IsometryMatrix base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  IsometryMatrix out;
  while (e > 0) {
    if (e & 1u) out = out * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return out;
}

double IsometryMatrix::distance(const IsometryMatrix& o) const {
  return std::min((m_ - o.m_).max_abs(), (m_ + o.m_).max_abs());
}

double IsometryMatrix::distance_to_identity() const { return distance(IsometryMatrix{}); }

}  // namespace rootadj
