#include "rootadj/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rootadj/error.hpp"

namespace rootadj {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Lorentz vector_of(const GeneralizedGeodesic& g) {
  if (auto p = std::get_if<ProperGeodesic>(&g)) return line_normal(*p);
  if (auto b = std::get_if<BoundaryPoint>(&g)) return point_vector(*b);
  return point_vector(std::get<InteriorPoint>(g).z);
}

double foot_position(const ProperGeodesic& l, const GeneralizedGeodesic& g) {
  if (auto p = std::get_if<ProperGeodesic>(&g))
    return position_along(l, to_interior(orthogonal_to(line_normal(l), line_normal(*p))));
  if (auto b = std::get_if<BoundaryPoint>(&g)) return position_along(l, *b);
  return position_along(l, std::get<InteriorPoint>(g).z);
}

IntersectionResult intersect_proper(const ProperGeodesic& g1, const ProperGeodesic& g2,
                                    const Tolerances& tol) {
  bool pp = chordal(g1.p, g2.p) < tol.vertex, pq = chordal(g1.p, g2.q) < tol.vertex;
  bool qp = chordal(g1.q, g2.p) < tol.vertex, qq = chordal(g1.q, g2.q) < tol.vertex;
  if ((pp && qq) || (pq && qp)) return Coincident{};
  if (pp || pq) return SharedEnd{g1.p};
  if (qp || qq) return SharedEnd{g1.q};
  Lorentz n1 = line_normal(g1), n2 = line_normal(g2);
  double s1 = inner(n1, point_vector(g2.p));
  double s2 = inner(n1, point_vector(g2.q));
  if ((s1 > 0) != (s2 > 0)) return Crossing{to_interior(orthogonal_to(n1, n2))};
  return Disjoint{std::acosh(std::max(1.0, std::abs(inner(n1, n2))))};
}

IntersectionResult intersect_ordered(const GeneralizedGeodesic& g1, const GeneralizedGeodesic& g2,
                                     const Tolerances& tol) {
  if (auto a = std::get_if<ProperGeodesic>(&g1)) {
    if (auto b = std::get_if<ProperGeodesic>(&g2)) return intersect_proper(*a, *b, tol);
    if (auto b = std::get_if<BoundaryPoint>(&g2)) {
      if (chordal(a->p, *b) < tol.vertex || chordal(a->q, *b) < tol.vertex) return SharedEnd{*b};
      return Disjoint{kInf};
    }
    const Complex& z = std::get<InteriorPoint>(g2).z;
    double d = std::abs(signed_distance(*a, z));
    if (d < tol.vertex) return Crossing{z};
    return Disjoint{d};
  }
  if (auto a = std::get_if<BoundaryPoint>(&g1)) {
    if (auto b = std::get_if<BoundaryPoint>(&g2)) {
      if (chordal(*a, *b) < tol.vertex) return SharedEnd{*a};
    }
    return Disjoint{kInf};
  }
  const Complex& z = std::get<InteriorPoint>(g1).z;
  const Complex& w = std::get<InteriorPoint>(g2).z;
  double d = hyperbolic_distance(z, w);
  if (d < tol.vertex) return Crossing{z};
  return Disjoint{d};
}

int rank(const GeneralizedGeodesic& g) { return static_cast<int>(g.index()); }

}  // namespace

Mat2 reflection_matrix(const ProperGeodesic& g) {
  Lorentz n = line_normal(g);
  double k = std::sqrt(2.0);
  return Mat2{n.b * k, -n.c * k, n.a * k, -n.b * k};
}

Complex half_turn_apply(const HalfTurn& h, const Complex& z) {
  Mat2 r = reflection_matrix(h.line);
  Complex w = std::conj(z);
  return (r.a * w + r.b) / (r.c * w + r.d);
}

IsometryMatrix compose_half_turns(const HalfTurn& h1, const HalfTurn& h2, const Tolerances& tol) {
  if (same_geodesic(h1.line, h2.line, tol.vertex))
    throw Error(ErrorCode::CoincidentLines, "half-turn lines coincide");
  return IsometryMatrix(reflection_matrix(h1.line) * reflection_matrix(h2.line));
}

ProperGeodesic involution_line(const ProperGeodesic& l, const IsometryMatrix& g, const Tolerances& tol) {
  Mat2 r = reflection_matrix(l) * g.raw();
  if (std::abs(r.trace()) > tol.alg * std::max(1.0, r.max_abs()))
    throw Error(ErrorCode::NotAnInvolution, "H_L g is not an involution; L is not admissible for g");
  return to_geodesic(Lorentz{r.c, 0.5 * (r.a - r.d), -r.b});
}

ProperGeodesic common_perpendicular(const GeneralizedGeodesic& g1, const GeneralizedGeodesic& g2,
                                    const Tolerances& tol) {
  if (g1.index() == g2.index() && g1.index() != 0 && same_point(g1, g2, tol.vertex))
    throw Error(ErrorCode::NoPerpendicular, "both inputs are the same point");
  IntersectionResult r = intersect(g1, g2, tol);
  if (!std::holds_alternative<Disjoint>(r))
    throw Error(ErrorCode::NotDisjoint, "inputs intersect");
  Lorentz x = orthogonal_to(vector_of(g1), vector_of(g2));
  if (x.b * x.b - x.a * x.c <= 0)
    throw Error(ErrorCode::NotDisjoint, "no common perpendicular");
  ProperGeodesic l = to_geodesic(x);
  if (foot_position(l, g1) > foot_position(l, g2)) l = l.reversed();
  return l;
}

IntersectionResult intersect(const GeneralizedGeodesic& g1, const GeneralizedGeodesic& g2,
                             const Tolerances& tol) {
  if (rank(g1) <= rank(g2)) return intersect_ordered(g1, g2, tol);
  IntersectionResult r = intersect_ordered(g2, g1, tol);
  // Report shared ends as the endpoint of the first argument when it is proper.
  if (auto s = std::get_if<SharedEnd>(&r)) {
    if (auto a = std::get_if<ProperGeodesic>(&g1)) {
      s->p = chordal(a->p, s->p) <= chordal(a->q, s->p) ? a->p : a->q;
    }
  }
  return r;
}

bool same_geodesic(const ProperGeodesic& g1, const ProperGeodesic& g2, double eps) {
  return (chordal(g1.p, g2.p) < eps && chordal(g1.q, g2.q) < eps) ||
         (chordal(g1.p, g2.q) < eps && chordal(g1.q, g2.p) < eps);
}

bool same_point(const GeneralizedGeodesic& g1, const GeneralizedGeodesic& g2, double eps) {
  if (g1.index() != g2.index()) return false;
  if (auto a = std::get_if<ProperGeodesic>(&g1))
    return same_geodesic(*a, std::get<ProperGeodesic>(g2), eps);
  if (auto a = std::get_if<BoundaryPoint>(&g1)) return chordal(*a, std::get<BoundaryPoint>(g2)) < eps;
  return hyperbolic_distance(std::get<InteriorPoint>(g1).z, std::get<InteriorPoint>(g2).z) < eps;
}

int side_of(const ProperGeodesic& g, const BoundaryPoint& x, double eps) {
  if (chordal(g.p, x) < eps || chordal(g.q, x) < eps) return 0;
  return inner(line_normal(g), point_vector(x)) > 0 ? 1 : -1;
}

int side_of(const ProperGeodesic& g, const Complex& z, double eps) {
  double d = signed_distance(g, z);
  if (std::abs(d) < eps) return 0;
  return d > 0 ? 1 : -1;
}

bool bounds_region(const ProperGeodesic& g1, const ProperGeodesic& g2, const ProperGeodesic& g3,
                   const Tolerances& tol) {
  const ProperGeodesic* g[3] = {&g1, &g2, &g3};
  for (int i = 0; i < 3; ++i) {
    IntersectionResult r = intersect(*g[i], *g[(i + 1) % 3], tol);
    if (!std::holds_alternative<Disjoint>(r) && !std::holds_alternative<SharedEnd>(r)) return false;
  }
  for (int i = 0; i < 3; ++i) {
    int seen = 0;
    for (int j = 1; j < 3; ++j) {
      const ProperGeodesic& o = *g[(i + j) % 3];
      for (const BoundaryPoint& x : {o.p, o.q}) {
        int s = side_of(*g[i], x, tol.vertex);
        if (s == 0) continue;
        if (seen != 0 && s != seen) return false;
        seen = s;
      }
    }
  }
  return true;
}

double normal_product(const ProperGeodesic& g1, const ProperGeodesic& g2) {
  return std::abs(inner(line_normal(g1), line_normal(g2)));
}

}  // namespace rootadj
