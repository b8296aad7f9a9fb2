#pragma once

#include <array>
#include <string>
#include <variant>

#include "rootadj/geodesic.hpp"
#include "rootadj/moebius.hpp"

namespace rootadj {

// Side indices in traversal order; vertex i joins side i and side i+1.
enum SideIndex { kAxA = 0, kL = 1, kAxB = 2, kLB = 3, kAxAinvB = 4, kLA = 5 };

struct Vertex {
  bool ideal = false;
  Complex z;        // when interior
  BoundaryPoint p;  // when ideal

  Lorentz vector() const { return ideal ? point_vector(p) : point_vector(z); }
};

double vertex_distance(const Vertex& v, const Vertex& w);  // hyperbolic, or chordal if either is ideal

struct HexagonConfig {
  // Proper sides are oriented for a traversal with the hexagon on the right.
  std::array<GeneralizedGeodesic, 6> sides;
  std::array<Vertex, 6> vertices;
  IsometryMatrix a, b;
  std::array<ElementClass, 3> classes;  // A, B, A^{-1}B
  // +1 all vertices weakly right of L, -1 all weakly left, 0 mixed.
  int orientation = 1;

  const ProperGeodesic& line(SideIndex i) const { return std::get<ProperGeodesic>(sides[i]); }
  bool proper(SideIndex i) const { return std::holds_alternative<ProperGeodesic>(sides[i]); }
  IsometryMatrix a_inv_b() const { return a.inverse() * b; }
  std::string literal_tag() const;
};

enum class Shape { Hexagon, Pentagon, Quadrilateral, Triangle };
std::string to_string(Shape s);

struct StoppingClass {
  std::string tag;        // letters for (A, B, A^{-1}B)
  std::string canonical;  // the one of the eleven configurations this tag rotates to
  Shape shape = Shape::Hexagon;
};

struct NotStopping {
  std::string reason;
};

using StoppingResult = std::variant<StoppingClass, NotStopping>;

HexagonConfig build_hexagon(const IsometryMatrix& a, const IsometryMatrix& b, const Tolerances& tol = {});
StoppingResult classify_stopping(const HexagonConfig& h, const Tolerances& tol = {});
// Re-roots at (B^{-1}, B^{-1}A) per step: the side list turns by two places.
HexagonConfig cyclic_rotate(const HexagonConfig& h, int k);

// Interior angle between the two half-turn sides meeting at a point-degenerate axis side.
double interior_angle(const HexagonConfig& h, SideIndex axis_side);

const std::array<std::string, 11>& stopping_tags();
std::string canonical_tag(const std::string& literal);

}  // namespace rootadj
