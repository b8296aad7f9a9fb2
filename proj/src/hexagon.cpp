#include "rootadj/hexagon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rootadj/error.hpp"

namespace rootadj {

namespace {

Vertex meet(const GeneralizedGeodesic& axis, const ProperGeodesic& line) {
  Vertex v;
  if (auto p = std::get_if<ProperGeodesic>(&axis)) {
    v.z = to_interior(orthogonal_to(line_normal(*p), line_normal(line)));
  } else if (auto b = std::get_if<BoundaryPoint>(&axis)) {
    v.ideal = true;
    v.p = *b;
  } else {
    v.z = std::get<InteriorPoint>(axis).z;
  }
  return v;
}

double position(const ProperGeodesic& g, const Vertex& v) {
  return v.ideal ? position_along(g, v.p) : position_along(g, v.z);
}

ProperGeodesic oriented(const ProperGeodesic& g, const Vertex& from, const Vertex& to) {
  return position(g, from) <= position(g, to) ? g : g.reversed();
}

// Signed side of a vertex relative to g, with tolerance: +1 right, -1 left, 0 on.
int vertex_side(const ProperGeodesic& g, const Vertex& v, const Tolerances& tol) {
  if (v.ideal) return side_of(g, v.p, tol.vertex);
  return side_of(g, v.z, tol.vertex);
}

Complex ray_direction(const Complex& p, const Vertex& q) {
  if (q.ideal) {
    if (q.p.is_infinity()) return 1.0;
    Complex x(q.p.value(), 0);
    return (x - p) / (x - std::conj(p));
  }
  return (q.z - p) / (q.z - std::conj(p));
}

}  // namespace

double vertex_distance(const Vertex& v, const Vertex& w) {
  if (v.ideal != w.ideal) return std::numeric_limits<double>::infinity();
  if (v.ideal) return chordal(v.p, w.p);
  return hyperbolic_distance(v.z, w.z);
}

std::string HexagonConfig::literal_tag() const {
  std::string t;
  for (const auto& c : classes) t += kind_letter(c.kind);
  return t;
}

std::string to_string(Shape s) {
  switch (s) {
    case Shape::Hexagon: return "hexagon";
    case Shape::Pentagon: return "pentagon";
    case Shape::Quadrilateral: return "quadrilateral";
    case Shape::Triangle: return "triangle";
  }
  return "unknown";
}

const std::array<std::string, 11>& stopping_tags() {
  static const std::array<std::string, 11> tags = {"HHH", "HPH", "PPH", "PPP", "HEH", "HEP",
                                                   "PEH", "PEP", "EEH", "EEP", "EEE"};
  return tags;
}

std::string canonical_tag(const std::string& literal) {
  if (literal.size() != 3) return {};
  for (int k = 0; k < 3; ++k) {
    std::string r = literal.substr(k) + literal.substr(0, k);
    if (std::find(stopping_tags().begin(), stopping_tags().end(), r) != stopping_tags().end()) return r;
  }
  return {};
}

HexagonConfig build_hexagon(const IsometryMatrix& a, const IsometryMatrix& b, const Tolerances& tol) {
  if (a.is_identity(tol.alg) || b.is_identity(tol.alg))
    throw Error(ErrorCode::ElementaryGroup, "a generator is the identity");
  GeneralizedGeodesic ax_a = axis_of(a, tol), ax_b = axis_of(b, tol);
  if (same_point(ax_a, ax_b, tol.vertex))
    throw Error(ErrorCode::ElementaryGroup, "generators share their axis");
  IntersectionResult r = intersect(ax_a, ax_b, tol);
  if (std::holds_alternative<SharedEnd>(r))
    throw Error(ErrorCode::ElementaryGroup, "axes share an end");
  if (!std::holds_alternative<Disjoint>(r))
    throw Error(ErrorCode::IntersectingAxes, "intersecting axes out of scope");

  HexagonConfig h;
  h.a = a;
  h.b = b;
  ProperGeodesic l = common_perpendicular(ax_a, ax_b, tol);
  ProperGeodesic la = involution_line(l, a, tol);
  ProperGeodesic lb = involution_line(l, b, tol);
  IsometryMatrix ab = a.inverse() * b;
  if (ab.is_identity(tol.alg)) throw Error(ErrorCode::ElementaryGroup, "A equals B");
  GeneralizedGeodesic ax_ab = axis_of(ab, tol);
  h.classes = {classify(a, tol), classify(b, tol), classify(ab, tol)};

  h.vertices[0] = meet(ax_a, l);
  h.vertices[1] = meet(ax_b, l);
  h.vertices[2] = meet(ax_b, lb);
  h.vertices[3] = meet(ax_ab, lb);
  h.vertices[4] = meet(ax_ab, la);
  h.vertices[5] = meet(ax_a, la);

  const GeneralizedGeodesic* axes[3] = {&ax_a, &ax_b, &ax_ab};
  for (int i = 0; i < 3; ++i) {
    int s = 2 * i;
    if (auto g = std::get_if<ProperGeodesic>(axes[i]))
      h.sides[s] = oriented(*g, h.vertices[(s + 5) % 6], h.vertices[s]);
    else
      h.sides[s] = *axes[i];
  }
  h.sides[kL] = oriented(l, h.vertices[0], h.vertices[1]);
  h.sides[kLB] = oriented(lb, h.vertices[2], h.vertices[3]);
  h.sides[kLA] = oriented(la, h.vertices[4], h.vertices[5]);

  int right = 0, left = 0;
  for (const Vertex& v : h.vertices) {
    int s = vertex_side(h.line(kL), v, tol);
    right += s > 0;
    left += s < 0;
  }
  h.orientation = left == 0 ? 1 : right == 0 ? -1 : 0;
  return h;
}

double interior_angle(const HexagonConfig& h, SideIndex axis_side) {
  int i = static_cast<int>(axis_side);
  const Vertex& p = h.vertices[i];
  const Vertex& before = h.vertices[(i + 4) % 6];
  const Vertex& after = h.vertices[(i + 1) % 6];
  Complex d1 = ray_direction(p.z, before), d2 = ray_direction(p.z, after);
  return std::abs(std::arg(d1 / d2));
}

StoppingResult classify_stopping(const HexagonConfig& h, const Tolerances& tol) {
  if (h.orientation == -1) return NotStopping{"orientation"};
  if (h.orientation == 0) return NotStopping{"non-convex"};
  for (int s = 0; s < 6; ++s) {
    if (!std::holds_alternative<ProperGeodesic>(h.sides[s])) continue;
    const auto& g = std::get<ProperGeodesic>(h.sides[s]);
    for (const Vertex& v : h.vertices)
      if (vertex_side(g, v, tol) < 0) return NotStopping{"non-convex"};
  }
  static const char* names[3] = {"A", "B", "A^-1B"};
  for (int i = 0; i < 3; ++i) {
    const ElementClass& c = h.classes[i];
    if (c.is(Kind::Identity)) return NotStopping{std::string("identity ") + names[i]};
    if (!c.is(Kind::Elliptic)) continue;
    bool primitive;
    try {
      primitive = is_primitive(c, tol);
    } catch (const Error&) {
      return NotStopping{std::string("unresolved order of ") + names[i]};
    }
    if (!primitive) return NotStopping{std::string("non-primitive elliptic ") + names[i]};
    double angle = interior_angle(h, static_cast<SideIndex>(2 * i));
    if (std::abs(angle - 0.5 * std::abs(c.rotation_angle)) > 10 * tol.vertex)
      return NotStopping{std::string("rotation direction of ") + names[i]};
  }
  StoppingClass out;
  out.tag = h.literal_tag();
  out.canonical = canonical_tag(out.tag);
  int degenerate = 0;
  for (const auto& c : h.classes) degenerate += !c.is(Kind::Hyperbolic);
  out.shape = static_cast<Shape>(degenerate);
  return out;
}

HexagonConfig cyclic_rotate(const HexagonConfig& h, int k) {
  k = ((k % 3) + 3) % 3;
  HexagonConfig out = h;
  for (int step = 0; step < k; ++step) {
    HexagonConfig prev = out;
    for (int i = 0; i < 6; ++i) {
      out.sides[i] = prev.sides[(i + 2) % 6];
      out.vertices[i] = prev.vertices[(i + 2) % 6];
    }
    IsometryMatrix binv = prev.b.inverse();
    out.a = binv;
    out.b = binv * prev.a;
    ElementClass cb = prev.classes[1], cab = prev.classes[2];
    for (ElementClass* c : {&cb, &cab})
      if (c->rotation_angle < std::numbers::pi) c->rotation_angle = -c->rotation_angle;
    out.classes = {cb, cab, prev.classes[0]};
  }
  return out;
}

}  // namespace rootadj
