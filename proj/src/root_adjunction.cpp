#include "rootadj/root_adjunction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "rootadj/error.hpp"

namespace rootadj {

namespace {

constexpr double kPi = std::numbers::pi;

double distance_to_line(const ProperGeodesic& g, const Vertex& v) {
  if (v.ideal) return std::min(chordal(g.p, v.p), chordal(g.q, v.p));
  return std::abs(signed_distance(g, v.z));
}

double position(const ProperGeodesic& g, const Vertex& v) {
  return v.ideal ? position_along(g, v.p) : position_along(g, v.z);
}

// Crossing of line with side i strictly between the side's vertices.
bool crosses_segment(const HexagonConfig& h, int i, const ProperGeodesic& line, const Tolerances& tol,
                     double margin) {
  if (!std::holds_alternative<ProperGeodesic>(h.sides[i])) return false;
  const ProperGeodesic& side = std::get<ProperGeodesic>(h.sides[i]);
  IntersectionResult r = intersect(line, side, tol);
  auto c = std::get_if<Crossing>(&r);
  if (c == nullptr) return false;
  const Vertex& v0 = h.vertices[(i + 5) % 6];
  const Vertex& v1 = h.vertices[i];
  Vertex hit;
  hit.z = c->z;
  if (vertex_distance(hit, v0) < margin || vertex_distance(hit, v1) < margin) return false;
  double t = position_along(side, c->z);
  return t > position(side, v0) && t < position(side, v1);
}

std::string kind_prefix(Kind k) { return to_string(k) + "-root:"; }

Complex direction_at(const Complex& p, const Complex& q) { return (q - p) / (q - std::conj(p)); }

Complex direction_at(const Complex& p, const BoundaryPoint& x) {
  if (x.is_infinity()) return 1.0;
  Complex q(x.value(), 0);
  return (q - p) / (q - std::conj(p));
}

Complex direction_at(const Complex& p, const Vertex& v) {
  return v.ideal ? direction_at(p, v.p) : direction_at(p, v.z);
}

// Whether some ray of line from p lies strictly inside the wedge spanned by rays to u and w.
bool inside_wedge(const Complex& p, const Vertex& u, const Vertex& w, const ProperGeodesic& line) {
  Complex du = direction_at(p, u), dw = direction_at(p, w);
  double span = std::arg(dw / du);
  for (const BoundaryPoint& e : {line.p, line.q}) {
    double a = std::arg(direction_at(p, e) / du);
    if (span > 0 ? (a > 0 && a < span) : (a < 0 && a > span)) return true;
  }
  return false;
}

}  // namespace

std::string to_string(Role r) { return r == Role::A ? "A" : "B"; }

std::string to_string(ExitTag t) {
  switch (t) {
    case ExitTag::InteriorAxY: return "InteriorAxY";
    case ExitTag::VertexAxY_LY: return "VertexAxY_LY";
    case ExitTag::InteriorLY: return "InteriorLY";
    case ExitTag::VertexLY_AxXinvY: return "VertexLY_AxXinvY";
    case ExitTag::InteriorAxXinvY: return "InteriorAxXinvY";
    case ExitTag::ClosureLX: return "ClosureLX";
  }
  return "unknown";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::DiscreteFree: return "DiscreteFree";
    case Outcome::DiscreteNotFree: return "DiscreteNotFree";
    case Outcome::NotDiscrete: return "NotDiscrete";
    case Outcome::NeedsEllipticAlgorithm: return "NeedsEllipticAlgorithm";
  }
  return "unknown";
}

bool Verdict::borderline() const {
  return std::any_of(flags.begin(), flags.end(),
                     [](const std::string& f) { return f.rfind("borderline", 0) == 0; });
}

RootedView rooted_view(const HexagonConfig& h, Role role) {
  if (role == Role::B)
    return {h.b, h.a, kAxB, kLB, kAxA, kLA, 5, 4, h.classes[1], h.classes[0], h.classes[2]};
  return {h.a, h.b, kAxA, kLA, kAxB, kLB, 2, 3, h.classes[0], h.classes[1], h.classes[2]};
}

IsometryMatrix fan_root(const HexagonConfig& h, Role role, long n, const Tolerances& tol) {
  RootedView v = rooted_view(h, role);
  if (!v.x_class.is(Kind::Elliptic) || n == 1) return nth_root(v.x, n, tol);
  int i = static_cast<int>(v.ax_x);
  const Complex p = h.vertices[i].z;
  const Vertex& u = h.vertices[(i + 4) % 6];
  const Vertex& w = h.vertices[(i + 1) % 6];
  double theta = v.x_class.rotation_angle;
  for (double total : {theta, theta - 2 * kPi * (theta > 0 ? 1 : -1)}) {
    IsometryMatrix r = rotation_with_angle(v.x, total / static_cast<double>(n), tol);
    if (inside_wedge(p, u, w, involution_line(h.line(kL), r, tol))) return r;
  }
  throw Error(ErrorCode::GeometryViolation, "no root branch sweeps the interior wedge");
}

ExitSide exit_side(const HexagonConfig& h, Role role, const ProperGeodesic& line, const Tolerances& tol) {
  RootedView v = rooted_view(h, role);
  ExitSide out;
  if (same_geodesic(line, h.line(v.line_x), tol.vertex)) {
    out.tag = ExitTag::ClosureLX;
    return out;
  }
  const double margin = 10 * tol.vertex;
  for (int forbidden : {static_cast<int>(kL), static_cast<int>(v.line_x)})
    if (crosses_segment(h, forbidden, line, tol, margin))
      throw Error(ErrorCode::GeometryViolation, "fan line crosses a side it cannot meet");

  struct Corner {
    int index;
    ExitTag tag;
  };
  const Corner corners[2] = {{v.vertex_y_ly, ExitTag::VertexAxY_LY}, {v.vertex_ly_xy, ExitTag::VertexLY_AxXinvY}};
  bool hit = false;
  for (const Corner& c : corners) {
    const Vertex& vx = h.vertices[c.index];
    double d = distance_to_line(line, vx);
    if (d >= 0.1 * tol.vertex && d < margin) out.borderline = true;
    if (!hit && d < tol.vertex) {
      hit = true;
      out.tag = c.tag;
      out.boundary_vertex = vx.ideal;
    }
  }
  if (hit) return out;

  const std::pair<int, ExitTag> sides[3] = {{v.ax_y, ExitTag::InteriorAxY},
                                            {v.line_y, ExitTag::InteriorLY},
                                            {kAxAinvB, ExitTag::InteriorAxXinvY}};
  int found = 0;
  for (const auto& [i, tag] : sides) {
    if (crosses_segment(h, i, line, tol, 0.0)) {
      out.tag = tag;
      ++found;
    }
  }
  if (found != 1)
    throw Error(ErrorCode::GeometryViolation,
                found == 0 ? "fan line has no exit side" : "fan line has several exit sides");
  return out;
}

RootLineFan root_line_fan(const HexagonConfig& h, Role role, long s_max, long n, const Tolerances& tol) {
  if (!std::holds_alternative<StoppingClass>(classify_stopping(h, tol)))
    throw Error(ErrorCode::NotStoppingInput, "hexagon is not a stopping configuration");
  if (n < 1 || s_max < 1 || s_max > n) throw Error(ErrorCode::InvalidArgument, "need 1 <= s_max <= n");
  RootLineFan fan;
  fan.role = role;
  fan.n = n;
  fan.root = fan_root(h, role, n, tol);
  IsometryMatrix power;
  for (long s = 1; s <= s_max; ++s) {
    power = power * fan.root;
    FanLine f;
    f.s = s;
    f.line = involution_line(h.line(kL), power, tol);
    f.exit = exit_side(h, role, f.line, tol);
    if (!fan.lines.empty() && fan.lines.back().exit.tag != f.exit.tag && f.exit.tag != ExitTag::ClosureLX)
      fan.splitting.emplace_back(s - 1, s);
    fan.lines.push_back(f);
  }
  return fan;
}

Verdict base_verdict(const HexagonConfig& h) {
  Verdict v;
  bool elliptic = std::any_of(h.classes.begin(), h.classes.end(),
                              [](const ElementClass& c) { return c.is(Kind::Elliptic); });
  v.outcome = elliptic ? Outcome::DiscreteNotFree : Outcome::DiscreteFree;
  v.clause = "base:identity-root";
  return v;
}

Verdict decide_adjoin(const HexagonConfig& h, Role role, long s, long n, const DecideOptions& opt) {
  const Tolerances& tol = opt.tol;
  if (!std::holds_alternative<StoppingClass>(classify_stopping(h, tol)))
    throw Error(ErrorCode::NotStoppingInput, "hexagon is not a stopping configuration");
  if (s < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "exponent parts must be positive");
  long g = std::gcd(s, n);
  s /= g;
  n /= g;
  if (s > n) throw Error(ErrorCode::InvalidArgument, "s > n: reduce the rational power first");
  if (n == 1) return base_verdict(h);

  RootedView view = rooted_view(h, role);
  RootLineFan fan = root_line_fan(h, role, n, n, tol);
  const ProperGeodesic& ly = h.line(view.line_y);
  std::vector<ProperGeodesic> lines = {h.line(kL)};
  for (const FanLine& f : fan.lines) lines.push_back(f.line);

  Verdict v;
  for (const FanLine& f : fan.lines)
    if (f.exit.borderline) v.flags.push_back("borderline:exit s=" + std::to_string(f.s));
  for (long k = 0; k <= n; ++k) {
    const ProperGeodesic& lk = lines[static_cast<size_t>(k)];
    double gap = std::min({chordal(lk.p, ly.p), chordal(lk.p, ly.q), chordal(lk.q, ly.p), chordal(lk.q, ly.q)});
    if (gap >= 0.1 * tol.vertex && gap < 10 * tol.vertex)
      v.flags.push_back("borderline:contact k=" + std::to_string(k));
    if (std::holds_alternative<Crossing>(intersect(lk, ly, tol))) v.crossings.push_back(k);
  }

  const std::string prefix = kind_prefix(view.x_class.kind);
  auto exit_of = [&](long k) { return fan.lines[static_cast<size_t>(k - 1)].exit; };

  if (v.crossings.empty()) {
    v.outcome = view.x_class.is(Kind::Elliptic) ? Outcome::DiscreteNotFree : Outcome::DiscreteFree;
    bool boundary_vertex = false;
    for (long k = 1; k < n; ++k) boundary_vertex = boundary_vertex || exit_of(k).boundary_vertex;
    if (boundary_vertex)
      v.clause = prefix + "boundary-vertex";
    else if (view.xy_class.is(Kind::Parabolic))
      v.clause = prefix + "exit-AxY-parabolic-corner";
    else if (exit_of(1).tag == ExitTag::InteriorAxXinvY)
      v.clause = prefix + "exit-AxXinvY";
    else
      v.clause = prefix + "split-AxY-AxXinvY";
    return v;
  }

  long k = v.crossings.front();
  for (long c : v.crossings)
    if (c > 0 && c < n) {
      k = c;
      break;
    }
  IsometryMatrix product = compose_half_turns({lines[static_cast<size_t>(k)]}, {ly}, tol);
  auto needs = [&](const std::string& why) {
    v.outcome = Outcome::NeedsEllipticAlgorithm;
    v.clause = prefix + "elliptic-algorithm-" + why;
    v.reduced_pair = std::make_pair(fan.root.pow(k), view.y);
    v.elliptic = product;
    return v;
  };
  if (v.crossings.size() > 1) return needs("multiple-crossings");

  bool primitive = false;
  try {
    primitive = is_primitive(classify(product, tol), tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnresolvedOrder) throw;
    v.flags.push_back("UnresolvedOrder");
    return needs("unresolved-order");
  }
  if (!primitive) return needs("nonprimitive");

  if (k == n && opt.corner_rule == CornerRule::AxisAvoid) {
    for (long s2 = 1; s2 < n; ++s2) {
      ExitTag t = exit_of(s2).tag;
      if (t == ExitTag::InteriorAxY || t == ExitTag::VertexAxY_LY) return needs("axis-avoid-rule");
    }
  }
  v.outcome = Outcome::DiscreteNotFree;
  if (k == 0)
    v.clause = prefix + "elliptic-Y";
  else if (k == n)
    v.clause = prefix + "exit-AxY-elliptic-corner";
  else if (exit_of(k).tag == ExitTag::VertexAxY_LY || exit_of(k).tag == ExitTag::VertexLY_AxXinvY)
    v.clause = prefix + "interior-vertex-primitive";
  else
    v.clause = prefix + "cross-LY-primitive";
  return v;
}

PowerSplit reduce_rational_power(long s, long n) {
  if (s < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "exponent parts must be positive");
  return {s / n, s % n};
}

Verdict decide_rational_power(const HexagonConfig& h, Role role, long s, long n, const DecideOptions& opt) {
  if (s < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "exponent parts must be positive");
  long g = std::gcd(s, n);
  s /= g;
  n /= g;
  if (s <= n) return decide_adjoin(h, role, s, n, opt);
  PowerSplit split = reduce_rational_power(s, n);
  IsometryMatrix a = h.a, b = h.b;
  (role == Role::B ? b : a) = (role == Role::B ? b : a).pow(split.w);
  HexagonConfig h2 = build_hexagon(a, b, opt.tol);
  if (!std::holds_alternative<StoppingClass>(classify_stopping(h2, opt.tol)))
    throw Error(ErrorCode::NotStoppingInput, "the pair with the integer power is not a stopping configuration");
  if (split.r == 0) {
    Verdict v = base_verdict(h2);
    v.clause = "base:integer-power";
    return v;
  }
  return decide_adjoin(h2, role, split.r, n, opt);
}

}  // namespace rootadj
