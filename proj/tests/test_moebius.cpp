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

IsometryMatrix rotation_about_i(double t) { return {std::cos(t), -std::sin(t), std::sin(t), std::cos(t)}; }

IsometryMatrix random_conjugator(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (;;) {
    double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    if (a * d - b * c > 0.2) return {a, b, c, d};
  }
}

}  // namespace

TEST_CASE("classify: trace thresholds") {
  CHECK(classify({1, 1, 0, 1}).is(Kind::Parabolic));
  auto h = classify({2, 0, 0, 0.5});
  REQUIRE(h.is(Kind::Hyperbolic));
  CHECK(h.translation_length == doctest::Approx(1.3862944).epsilon(1e-7));
  auto e = classify(rotation_about_i(kPi / 4));
  REQUIRE(e.is(Kind::Elliptic));
  CHECK(e.rotation_angle == doctest::Approx(kPi / 2));
  REQUIRE(e.finite_order.has_value());
  CHECK(*e.finite_order == 4);
  CHECK(classify({-1, 0, 0, -1}).is(Kind::Identity));
}

TEST_CASE("classify is conjugation invariant") {
  std::mt19937_64 rng(7);
  const IsometryMatrix samples[] = {{2, 0, 0, 0.5}, {1, 3, 0, 1}, rotation_about_i(0.7), rotation_about_i(-2.2)};
  for (int trial = 0; trial < 200; ++trial) {
    IsometryMatrix t = random_conjugator(rng);
    for (const auto& m : samples) {
      auto e0 = classify(m);
      auto e1 = classify(t * m * t.inverse());
      REQUIRE(e0.kind == e1.kind);
      CHECK(std::abs(e0.translation_length - e1.translation_length) < 1e-7);
      CHECK(std::abs(e0.rotation_angle - e1.rotation_angle) < 1e-7);
    }
  }
}

TEST_CASE("rotation angle sign follows the c entry") {
  auto a = classify(rotation_about_i(0.3));
  auto b = classify(rotation_about_i(-0.3));
  CHECK(a.rotation_angle == doctest::Approx(0.6));
  CHECK(b.rotation_angle == doctest::Approx(-0.6));
  CHECK(classify(rotation_about_i(kPi / 2)).rotation_angle == doctest::Approx(kPi));
}

TEST_CASE("nth_root examples") {
  CHECK(nth_root({4, 0, 0, 0.25}, 2).equivalent({2, 0, 0, 0.5}));
  CHECK(nth_root({1, 3, 0, 1}, 3).equivalent({1, 1, 0, 1}));
  IsometryMatrix m(5, 3, 3, 2);
  CHECK(nth_root(m, 3).pow(3).distance(m) < 1e-9);
  CHECK_THROWS_AS(nth_root(IsometryMatrix{}, 2), Error);
}

TEST_CASE("elliptic roots divide the angle and keep the fixed point") {
  IsometryMatrix m = rotation_about_i(1.1);
  IsometryMatrix r = nth_root(m, 3);
  CHECK(classify(r).rotation_angle == doctest::Approx(2.2 / 3));
  CHECK(r.pow(3).distance(m) < 1e-12);
  auto ax = std::get<InteriorPoint>(axis_of(r)).z;
  CHECK(std::abs(ax - Complex(0, 1)) < 1e-12);
}

TEST_CASE("rational_power examples and commutation") {
  IsometryMatrix m(5, 3, 3, 2);
  CHECK(rational_power(m, 1, 1).equivalent(m));
  CHECK(rational_power({4, 0, 0, 0.25}, 3, 2).equivalent({8, 0, 0, 0.125}));
  CHECK(rational_power(m, 5, 3).pow(3).distance(m.pow(5)) < 1e-8);
  for (long k : {2L, 3L}) {
    CHECK(rational_power(m, 2, 5).distance(rational_power(m, 2 * k, 5 * k)) < 1e-9);
    CHECK(rational_power({1, 2, 0, 1}, 3, 4).distance(rational_power({1, 2, 0, 1}, 3 * k, 4 * k)) < 1e-9);
  }
}

TEST_CASE("line_matrix examples") {
  auto l1 = line_matrix({2, 0, 0, 0.5}).m;
  CHECK((l1 - Mat2{1, 0, 0, -1}).max_abs() < 1e-12);
  auto l2 = line_matrix({std::cosh(1.0), std::sinh(1.0), std::sinh(1.0), std::cosh(1.0)}).m;
  CHECK((l2 - Mat2{0, 1, 1, 0}).max_abs() < 1e-12);
  auto l3 = line_matrix({1, 1, 0, 1}).m;
  CHECK((l3 - Mat2{0, 1, 0, 0}).max_abs() < 1e-12);
  // Half-turn: still defined, no degeneracy with the canonical lift.
  auto l4 = line_matrix(rotation_about_i(kPi / 2));
  CHECK(std::abs(l4.m.trace()) < 1e-12);
}

TEST_CASE("line matrix fixed points are the axis ends") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    IsometryMatrix t = random_conjugator(rng);
    IsometryMatrix m = t * IsometryMatrix(3, 0, 0, 1.0 / 3) * t.inverse();
    Mat2 l = line_matrix(m).m;
    CHECK(std::abs(l.trace()) < 1e-9);
    auto ax = std::get<ProperGeodesic>(axis_of(m));
    for (const BoundaryPoint& x : {ax.p, ax.q}) {
      double u = l.a * x.u + l.b * x.v, v = l.c * x.u + l.d * x.v;
      CHECK(std::abs(u * x.v - v * x.u) < 1e-7 * std::hypot(u, v) + 1e-12);
    }
  }
}

TEST_CASE("axes_perpendicular examples") {
  IsometryMatrix diag(2, 0, 0, 0.5);
  IsometryMatrix unit(std::cosh(1.0), std::sinh(1.0), std::sinh(1.0), std::cosh(1.0));
  CHECK(axes_perpendicular(diag, unit));
  CHECK(axes_perpendicular(unit, diag));
  // axis (1,3): hyperbolic element conjugated from diag by z -> (3z+1)/(z+1).
  IsometryMatrix t(3, 1, 1, 1);
  CHECK_FALSE(axes_perpendicular(diag, t * diag * t.inverse()));
  CHECK_FALSE(axes_perpendicular(diag, diag));
}

TEST_CASE("axis_of examples") {
  auto a = std::get<ProperGeodesic>(axis_of({2, 0, 0, 0.5}));
  CHECK(chordal(a.p, BoundaryPoint::real(0)) < 1e-12);
  CHECK(a.q.is_infinity());
  CHECK(std::get<BoundaryPoint>(axis_of({1, 1, 0, 1})).is_infinity());
  auto z = std::get<InteriorPoint>(axis_of(rotation_about_i(kPi / 5))).z;
  CHECK(std::abs(z - Complex(0, 1)) < 1e-12);
}

TEST_CASE("is_primitive") {
  auto with_angle = [](double a) { return classify(rotation_about_i(a / 2)); };
  CHECK(is_primitive(with_angle(2 * kPi / 5)));
  CHECK_FALSE(is_primitive(with_angle(4 * kPi / 5)));
  CHECK(is_primitive(with_angle(-2 * kPi / 5)));
  CHECK(is_primitive(with_angle(kPi)));
  auto irr = with_angle(1.0);
  CHECK_FALSE(is_primitive(irr));
  CHECK_FALSE(irr.finite_order.has_value());
  auto four = with_angle(4 * kPi / 5);
  REQUIRE(four.finite_order.has_value());
  CHECK(*four.finite_order == 5);
}

TEST_CASE("rational recognition rejects classic irrationals") {
  const double golden = (std::sqrt(5.0) - 1) / 2;
  for (double x : {1.0 / (2 * kPi), golden, std::sqrt(2.0) - 1, std::exp(1.0) - 2}) {
    auto r = recognize_rational(x);
    CHECK_FALSE(r.value.has_value());
    CHECK_FALSE(r.unresolved);
  }
  auto r = recognize_rational(3.0 / 7 + 1e-13);
  REQUIRE(r.value.has_value());
  CHECK(r.value->p == 3);
  CHECK(r.value->q == 7);
}
