#include "rootadj/render.hpp"

#include <cmath>
#include <cstdio>
#include <set>

namespace rootadj {

namespace {

Complex to_disc(const Complex& z) { return (z - Complex(0, 1)) / (z + Complex(0, 1)); }

Complex to_disc(const BoundaryPoint& p) {
  if (p.is_infinity()) return 1.0;
  return to_disc(Complex(p.value(), 0));
}

Complex to_disc(const Vertex& v) { return v.ideal ? to_disc(v.p) : to_disc(v.z); }

// Screen coordinates: y grows downwards.
Complex screen(const Complex& w) { return {w.real(), -w.imag()}; }

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string point(const Complex& w) { return num(w.real()) + " " + num(w.imag()); }

// Path along the geodesic with disc endpoints e1, e2 (unit circle), from p to q.
std::string geodesic_path(const Complex& e1, const Complex& e2, const Complex& p, const Complex& q,
                          const std::string& cls) {
  Complex sp = screen(p), sq = screen(q);
  std::string d = "M " + point(sp);
  double cos_d = (e1 * std::conj(e2)).real();
  if (1 + cos_d < 1e-9) {
    d += " L " + point(sq);
  } else {
    Complex c = screen((e1 + e2) / (1 + cos_d));
    double r = std::abs(screen(e1) - c);
    Complex u = sp - c, v = sq - c;
    int sweep = u.real() * v.imag() - u.imag() * v.real() > 0 ? 1 : 0;
    d += " A " + num(r) + " " + num(r) + " 0 0 " + std::to_string(sweep) + " " + point(sq);
  }
  return "  <path class=\"" + cls + "\" d=\"" + d + "\"/>\n";
}

}  // namespace

std::string render_svg(const HexagonConfig& h, const RootLineFan* fan) {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"-1.05 -1.05 2.1 2.1\">\n"
      "  <style>\n"
      "    .disc { fill: none; stroke: #000; stroke-width: 0.006; }\n"
      "    .axis { fill: none; stroke: #1f5fa8; stroke-width: 0.008; }\n"
      "    .halfturn { fill: none; stroke: #b8321f; stroke-width: 0.008; }\n"
      "    .fan { fill: none; stroke: #2e8b3a; stroke-width: 0.005; stroke-dasharray: 0.02 0.01; }\n"
      "    .vertex { fill: #000; }\n"
      "    .vertex.ideal { fill: #fff; stroke: #000; stroke-width: 0.004; }\n"
      "  </style>\n"
      "  <circle class=\"disc\" cx=\"0\" cy=\"0\" r=\"1\"/>\n";
  for (int i = 0; i < 6; ++i) {
    if (!h.proper(static_cast<SideIndex>(i))) continue;
    const ProperGeodesic& g = h.line(static_cast<SideIndex>(i));
    out += geodesic_path(to_disc(g.p), to_disc(g.q), to_disc(h.vertices[(i + 5) % 6]), to_disc(h.vertices[i]),
                         i % 2 == 0 ? "axis" : "halfturn");
  }
  if (fan) {
    for (const FanLine& f : fan->lines) {
      Complex e1 = to_disc(f.line.p), e2 = to_disc(f.line.q);
      out += geodesic_path(e1, e2, e1, e2, "fan");
    }
  }
  std::set<std::string> marked;
  for (const Vertex& v : h.vertices) {
    Complex w = screen(to_disc(v));
    if (!marked.insert(point(w)).second) continue;
    out += "  <circle class=\"vertex" + std::string(v.ideal ? " ideal" : "") + "\" cx=\"" + num(w.real()) +
           "\" cy=\"" + num(w.imag()) + "\" r=\"0.015\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace rootadj
