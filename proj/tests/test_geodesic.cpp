#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "rootadj/error.hpp"
#include "rootadj/geodesic.hpp"
#include "rootadj/moebius.hpp"

using namespace rootadj;

namespace {

constexpr double kPi = std::numbers::pi;

HalfTurn ht(double p, double q) { return {geodesic(p, q)}; }

bool near_point(const BoundaryPoint& x, double value, double eps = 1e-9) {
  return chordal(x, std::isinf(value) ? BoundaryPoint::infinity() : BoundaryPoint::real(value)) < eps;
}

bool has_ends(const ProperGeodesic& g, double p, double q, double eps = 1e-9) {
  return (near_point(g.p, p, eps) && near_point(g.q, q, eps)) ||
         (near_point(g.p, q, eps) && near_point(g.q, p, eps));
}

// Hyperbolic element translating along g by len (axis oracle independent of axis_of).
IsometryMatrix translation_along(const ProperGeodesic& g, double len) {
  Mat2 t{g.q.u, g.p.u, g.q.v, g.p.v};
  if (t.det() < 0) t = Mat2{g.p.u, g.q.u, g.p.v, g.q.v};
  IsometryMatrix tt(t);
  return tt * IsometryMatrix(std::exp(len / 2), 0, 0, std::exp(-len / 2)) * tt.inverse();
}

ProperGeodesic random_geodesic(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-5, 5);
  double p = u(rng), q = u(rng);
  if (std::abs(p - q) < 0.1) q = p + 0.5;
  if (rng() % 10 == 0) return geodesic(p, INFINITY);
  return geodesic(p, q);
}

IsometryMatrix random_isometry(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2, 2);
  for (;;) {
    double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    if (a * d - b * c > 0.2) return {a, b, c, d};
  }
}

BoundaryPoint move(const IsometryMatrix& m, const BoundaryPoint& x) {
  return BoundaryPoint::homogeneous(m.a() * x.u + m.b() * x.v, m.c() * x.u + m.d() * x.v);
}

ProperGeodesic move(const IsometryMatrix& m, const ProperGeodesic& g) { return {move(m, g.p), move(m, g.q)}; }

}  // namespace

TEST_CASE("half_turn_apply examples") {
  CHECK(std::abs(half_turn_apply(ht(-1, 1), {0, 1}) - Complex(0, 1)) < 1e-12);
  CHECK(std::abs(half_turn_apply(ht(0, INFINITY), {1, 1}) - Complex(-1, 1)) < 1e-12);
  CHECK(std::abs(half_turn_apply(ht(-1, 1), {0, 2}) - Complex(0, 0.5)) < 1e-12);
}

TEST_CASE("half_turn_apply is an involution") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> x(-4, 4), y(0.01, 4);
  for (int i = 0; i < 1000; ++i) {
    HalfTurn h{random_geodesic(rng)};
    Complex z(x(rng), y(rng));
    Complex back = half_turn_apply(h, half_turn_apply(h, z));
    CHECK(std::abs(back - z) < 1e-9 * std::max(1.0, std::abs(z)));
    CHECK(std::abs(reflect(h.line, z) - half_turn_apply(h, z)) < 1e-9 * std::max(1.0, std::abs(z)));
  }
}

TEST_CASE("compose_half_turns examples") {
  CHECK(classify(compose_half_turns(ht(0, INFINITY), ht(-1, 1))).is(Kind::Elliptic));
  IsometryMatrix m = compose_half_turns(ht(-0.5, 0.5), ht(-3, -1));
  CHECK(m.equivalent(IsometryMatrix(0.5, 1, -4, -6)));
  CHECK(std::abs(m.trace()) == doctest::Approx(5.5));
  CHECK(classify(m).is(Kind::Hyperbolic));
  CHECK(classify(compose_half_turns(ht(0, INFINITY), ht(1, INFINITY))).is(Kind::Parabolic));
  CHECK_THROWS_AS(compose_half_turns(ht(0, 1), ht(1, 0)), Error);
}

TEST_CASE("compose_half_turns inverse relation") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    HalfTurn a{random_geodesic(rng)}, b{random_geodesic(rng)};
    if (same_geodesic(a.line, b.line, 1e-6)) continue;
    CHECK((compose_half_turns(a, b) * compose_half_turns(b, a)).is_identity(1e-9));
  }
}

TEST_CASE("involution_line: axis-parallel g is rejected") {
  CHECK_THROWS_AS(involution_line(geodesic(0, INFINITY), IsometryMatrix(2, 0, 0, 0.5)), Error);
}

TEST_CASE("involution_line: hyperbolic g, foot at half the translation length") {
  const double c = std::cosh(1.0), s = std::sinh(1.0);
  IsometryMatrix g(c, s, s, c);
  ProperGeodesic l = geodesic(0, INFINITY);
  ProperGeodesic x = involution_line(l, g);
  // Perpendicular to the axis (-1,1): circle orthogonality with the unit circle.
  Lorentz unit = line_normal(geodesic(-1, 1));
  CHECK(std::abs(inner(line_normal(x), unit)) < 1e-12);
  Complex foot = to_interior(orthogonal_to(line_normal(x), unit));
  CHECK(hyperbolic_distance(foot, {0, 1}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(has_ends(x, -1 / std::tanh(0.5), -std::tanh(0.5)));
  CHECK(compose_half_turns({l}, {x}).distance(g) < 1e-9);
}

TEST_CASE("involution_line: rotation about i") {
  for (double theta : {0.4, 1.3, 2.0, -0.9}) {
    IsometryMatrix g(std::cos(theta / 2), -std::sin(theta / 2), std::sin(theta / 2), std::cos(theta / 2));
    ProperGeodesic l = geodesic(0, INFINITY);
    ProperGeodesic x = involution_line(l, g);
    CHECK(std::abs(signed_distance(x, {0, 1})) < 1e-12);
    CHECK(normal_product(x, l) == doctest::Approx(std::abs(std::cos(theta / 2))));
    CHECK(compose_half_turns({l}, {x}).distance(g) < 1e-9);
  }
}

TEST_CASE("common_perpendicular examples") {
  ProperGeodesic a = common_perpendicular(geodesic(-3, -1), geodesic(1, 3));
  CHECK(has_ends(a, -std::sqrt(3.0), std::sqrt(3.0)));
  ProperGeodesic b = common_perpendicular(BoundaryPoint::real(0), BoundaryPoint::infinity());
  CHECK(near_point(b.p, 0));
  CHECK(b.q.is_infinity());
  ProperGeodesic c = common_perpendicular(InteriorPoint{{0, 1}}, InteriorPoint{{0, 2}});
  CHECK(near_point(c.p, 0));
  CHECK(near_point(c.q, INFINITY));
  CHECK_THROWS_AS(common_perpendicular(InteriorPoint{{0, 1}}, InteriorPoint{{0, 1}}), Error);
  CHECK_THROWS_AS(common_perpendicular(geodesic(0, INFINITY), geodesic(-1, 1)), Error);
}

TEST_CASE("common_perpendicular is perpendicular by the line-matrix test") {
  std::mt19937_64 rng(9);
  int tested = 0;
  while (tested < 200) {
    ProperGeodesic g1 = random_geodesic(rng), g2 = random_geodesic(rng);
    if (!std::holds_alternative<Disjoint>(intersect(g1, g2))) continue;
    if (std::get<Disjoint>(intersect(g1, g2)).distance < 0.05) continue;
    ProperGeodesic l = common_perpendicular(g1, g2);
    IsometryMatrix tl = translation_along(l, 0.8);
    CHECK(axes_perpendicular(tl, translation_along(g1, 0.5)));
    CHECK(axes_perpendicular(tl, translation_along(g2, 1.5)));
    ++tested;
  }
}

TEST_CASE("intersect examples") {
  auto r1 = intersect(geodesic(0, INFINITY), geodesic(-1, 1));
  REQUIRE(std::holds_alternative<Crossing>(r1));
  CHECK(std::abs(std::get<Crossing>(r1).z - Complex(0, 1)) < 1e-12);
  auto r2 = intersect(geodesic(0, INFINITY), geodesic(0, 2));
  REQUIRE(std::holds_alternative<SharedEnd>(r2));
  CHECK(near_point(std::get<SharedEnd>(r2).p, 0));
  auto r3 = intersect(geodesic(-3, -1), geodesic(1, 3));
  REQUIRE(std::holds_alternative<Disjoint>(r3));
  // Oracle: both lines meet the common perpendicular (-sqrt3, sqrt3) at its crossings.
  ProperGeodesic l = geodesic(-std::sqrt(3.0), std::sqrt(3.0));
  Complex f1 = std::get<Crossing>(intersect(l, geodesic(-3, -1))).z;
  Complex f2 = std::get<Crossing>(intersect(l, geodesic(1, 3))).z;
  CHECK(std::get<Disjoint>(r3).distance == doctest::Approx(hyperbolic_distance(f1, f2)).epsilon(1e-12));
}

TEST_CASE("bounds_region examples and invariance") {
  auto a = geodesic(-3, -1), b = geodesic(-0.5, 0.5), c = geodesic(1, 3);
  CHECK(bounds_region(a, b, c));
  CHECK_FALSE(bounds_region(geodesic(-3, 3), geodesic(-1, 1), geodesic(4, 5)));
  CHECK(bounds_region(geodesic(0, 1), geodesic(1, 2), geodesic(2, 3)));
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    ProperGeodesic g[3] = {random_geodesic(rng), random_geodesic(rng), random_geodesic(rng)};
    bool base = bounds_region(g[0], g[1], g[2]);
    CHECK(bounds_region(g[1], g[2], g[0]) == base);
    CHECK(bounds_region(g[2], g[1], g[0]) == base);
    IsometryMatrix t = random_isometry(rng);
    CHECK(bounds_region(move(t, g[0]), move(t, g[1]), move(t, g[2])) == base);
  }
}
