#pragma once

#include <array>

#include "rootadj/tolerances.hpp"

namespace rootadj {

// Plain 2x2 real matrix, row-major. Used for reflections (det -1) and line matrices.
struct Mat2 {
  double a = 1, b = 0, c = 0, d = 1;

  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }
  double max_abs() const;
  Mat2 operator*(const Mat2& o) const;
  Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Mat2 operator*(double k) const { return {a * k, b * k, c * k, d * k}; }
  // Classical adjugate; equals the inverse when det = 1.
  Mat2 adj() const { return {d, -b, -c, a}; }
};

// Element of PSL(2,R): determinant 1, stored with the canonical sign lift.
class IsometryMatrix {
 public:
  IsometryMatrix() = default;
  // Scales by 1/sqrt(det); throws ValidationError when det <= 0.
  IsometryMatrix(double a, double b, double c, double d);
  explicit IsometryMatrix(const Mat2& m);

  static IsometryMatrix identity() { return {}; }

  double a() const { return m_.a; }
  double b() const { return m_.b; }
  double c() const { return m_.c; }
  double d() const { return m_.d; }
  const Mat2& raw() const { return m_; }
  std::array<double, 4> entries() const { return {m_.a, m_.b, m_.c, m_.d}; }

  double trace() const { return m_.a + m_.d; }
  IsometryMatrix inverse() const;
  IsometryMatrix operator*(const IsometryMatrix& o) const;
  IsometryMatrix pow(long k) const;

  // min(|M - N|, |M + N|) in the max-entry norm.
  double distance(const IsometryMatrix& o) const;
  double distance_to_identity() const;
  bool equivalent(const IsometryMatrix& o, double eps = Tolerances{}.alg) const {
    return distance(o) < eps;
  }
  bool is_identity(double eps = Tolerances{}.alg) const { return distance_to_identity() < eps; }

 private:
  Mat2 m_;
  struct Trusted {};
  // For products of already-normalized matrices: recomputing det loses accuracy.
  IsometryMatrix(const Mat2& m, Trusted) : m_(m) { canonicalize(); }
  void canonicalize();
};

}  // namespace rootadj
