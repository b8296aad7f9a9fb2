#pragma once

#include <variant>

#include "rootadj/matrix.hpp"
#include "rootadj/points.hpp"
#include "rootadj/tolerances.hpp"

namespace rootadj {

struct HalfTurn {
  ProperGeodesic line;
};

// Reflection matrix [[B, -C], [A, -B]] / sqrt(B^2 - AC); acts as z -> R(conj z).
Mat2 reflection_matrix(const ProperGeodesic& g);

Complex half_turn_apply(const HalfTurn& h, const Complex& z);
IsometryMatrix compose_half_turns(const HalfTurn& h1, const HalfTurn& h2, const Tolerances& tol = {});
ProperGeodesic involution_line(const ProperGeodesic& l, const IsometryMatrix& g, const Tolerances& tol = {});
ProperGeodesic common_perpendicular(const GeneralizedGeodesic& g1, const GeneralizedGeodesic& g2,
                                    const Tolerances& tol = {});

struct Crossing {
  Complex z;
};
struct SharedEnd {
  BoundaryPoint p;
};
struct Disjoint {
  double distance = 0;  // +inf when one side is a boundary point
};
struct Coincident {};

using IntersectionResult = std::variant<Crossing, SharedEnd, Disjoint, Coincident>;

IntersectionResult intersect(const GeneralizedGeodesic& g1, const GeneralizedGeodesic& g2,
                             const Tolerances& tol = {});

// Same underlying point set (orientation ignored).
bool same_geodesic(const ProperGeodesic& g1, const ProperGeodesic& g2, double eps);
bool same_point(const GeneralizedGeodesic& g1, const GeneralizedGeodesic& g2, double eps);

// Side of a boundary point relative to oriented g: +1 right, -1 left, 0 endpoint.
int side_of(const ProperGeodesic& g, const BoundaryPoint& x, double eps);
int side_of(const ProperGeodesic& g, const Complex& z, double eps);

bool bounds_region(const ProperGeodesic& g1, const ProperGeodesic& g2, const ProperGeodesic& g3,
                   const Tolerances& tol = {});

// |<X,Y>| for unit normals: cosine of the angle (< 1) or cosh of the distance (> 1).
double normal_product(const ProperGeodesic& g1, const ProperGeodesic& g2);

}  // namespace rootadj
