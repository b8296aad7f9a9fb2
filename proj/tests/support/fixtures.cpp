#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace fixtures {

namespace {
constexpr double kPi = std::numbers::pi;
}

IsometryMatrix translation_along(const ProperGeodesic& g, double len) {
  Mat2 t{g.q.u, g.p.u, g.q.v, g.p.v};
  if (t.det() < 0) t = Mat2{g.p.u, g.q.u, g.p.v, g.q.v};
  IsometryMatrix tt(t);
  return tt * IsometryMatrix(std::exp(len / 2), 0, 0, std::exp(-len / 2)) * tt.inverse();
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

Complex move(const IsometryMatrix& m, const Complex& z) { return (m.a() * z + m.b()) / (m.c() * z + m.d()); }

BoundaryPoint from_disc_angle(double t) { return BoundaryPoint::homogeneous(-std::cos(t / 2), std::sin(t / 2)); }

ProperGeodesic line_through_axis_point(double y, double t) {
  return geodesic(-y * std::tan(t), y / std::tan(t));
}

std::pair<IsometryMatrix, IsometryMatrix> generators(const LineTriple& t) {
  return {compose_half_turns({t.l}, {t.la}), compose_half_turns({t.l}, {t.lb})};
}

std::pair<IsometryMatrix, IsometryMatrix> right_handed(const LineTriple& t) {
  auto g = generators(t);
  HexagonConfig h = build_hexagon(g.first, g.second);
  if (h.orientation == -1) return generators({t.l, t.lb, t.la});
  return g;
}

namespace {

// Angle between L_A and L_B at their crossing, as a function of the height of the A vertex.
double eee_angle(double ya, double tb) {
  ProperGeodesic la = line_through_axis_point(ya, kPi / 6);
  ProperGeodesic lb = line_through_axis_point(2.0, tb);
  if (!std::holds_alternative<Crossing>(intersect(la, lb))) return 0;
  return std::acos(std::min(1.0, normal_product(la, lb)));
}

}  // namespace

LineTriple configuration(const std::string& tag) {
  const ProperGeodesic l = geodesic(0, INFINITY);
  const double tb = (kPi - kPi / 3) / 2;  // interior angle pi/3 at 2i
  const ProperGeodesic lb_e = line_through_axis_point(2.0, tb);
  const double shared = 2.0 / std::tan(tb);
  if (tag == "HHH") return {l, geodesic(0.2, 0.5), geodesic(2, 8)};
  if (tag == "HPH") return {l, geodesic(0.2, 0.5), geodesic(2, INFINITY)};
  if (tag == "PPH") return {l, geodesic(0, 0.5), geodesic(2, INFINITY)};
  if (tag == "PPP") return {l, geodesic(0, 1), geodesic(1, INFINITY)};
  if (tag == "HEH") return {l, geodesic(0.2, 0.5), lb_e};
  if (tag == "HEP") return {l, geodesic(0.3, shared), lb_e};
  if (tag == "PEH") return {l, geodesic(0, 0.5), lb_e};
  if (tag == "PEP") return {l, geodesic(0, shared), lb_e};
  if (tag == "EEH") return {l, line_through_axis_point(0.5, kPi / 6), lb_e};
  if (tag == "EEP") return {l, line_through_axis_point(shared * std::tan(kPi / 6), kPi / 6), lb_e};
  if (tag == "EEE") {
    double lo = shared * std::tan(kPi / 6) + 1e-9, hi = 1.9;
    for (int i = 0; i < 200; ++i) {
      double mid = 0.5 * (lo + hi);
      (eee_angle(mid, tb) < kPi / 4 ? lo : hi) = mid;
    }
    return {l, line_through_axis_point(0.5 * (lo + hi), kPi / 6), lb_e};
  }
  throw std::invalid_argument("unknown configuration " + tag);
}

LineTriple crossing_configuration(double phi, double a, double lo) {
  ProperGeodesic l1 = geodesic(1, 4);
  auto f = [&](double x) { return std::acos(std::min(1.0, normal_product(geodesic(a, x), l1))) - phi; };
  double x0 = lo + 1e-9, x1 = 1.6 - 1e-9;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (x0 + x1);
    ((f(x0) < 0) == (f(mid) < 0) ? x0 : x1) = mid;
  }
  return {geodesic(0, INFINITY), geodesic(a, 0.5 * (x0 + x1)), geodesic(1.6, 2.5)};
}

LineTriple random_hhh(std::mt19937_64& rng, double min_gap) {
  std::uniform_real_distribution<double> u(0, 2 * kPi);
  for (;;) {
    std::vector<double> t(6);
    for (double& x : t) x = u(rng);
    std::sort(t.begin(), t.end());
    bool ok = 2 * kPi - (t[5] - t[0]) > min_gap;
    for (int i = 1; i < 6; ++i) ok = ok && t[i] - t[i - 1] > min_gap;
    if (!ok) continue;
    ProperGeodesic g[3];
    for (int i = 0; i < 3; ++i) g[i] = {from_disc_angle(t[2 * i]), from_disc_angle(t[2 * i + 1])};
    int r = static_cast<int>(rng() % 3);
    return {g[r], g[(r + 1) % 3], g[(r + 2) % 3]};
  }
}

}  // namespace fixtures
