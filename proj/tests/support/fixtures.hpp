#pragma once

#include <random>
#include <string>
#include <utility>

#include "rootadj/geodesic.hpp"
#include "rootadj/hexagon.hpp"
#include "rootadj/matrix.hpp"

namespace fixtures {

using namespace rootadj;

IsometryMatrix translation_along(const ProperGeodesic& g, double len);
IsometryMatrix random_isometry(std::mt19937_64& rng);
BoundaryPoint move(const IsometryMatrix& m, const BoundaryPoint& x);
ProperGeodesic move(const IsometryMatrix& m, const ProperGeodesic& g);
Complex move(const IsometryMatrix& m, const Complex& z);

// Point of the boundary circle at disc angle t, pulled back to the half-plane.
BoundaryPoint from_disc_angle(double t);
// Geodesic through i*y making angle 2t with the imaginary axis.
ProperGeodesic line_through_axis_point(double y, double t);

struct LineTriple {
  ProperGeodesic l, la, lb;
};

// A = H_L H_{L_A}, B = H_L H_{L_B}.
std::pair<IsometryMatrix, IsometryMatrix> generators(const LineTriple& t);
// The generator pair whose hexagon lies on the right of L (swaps L_A and L_B if needed).
std::pair<IsometryMatrix, IsometryMatrix> right_handed(const LineTriple& t);

// One configuration for each of the eleven stopping tags.
LineTriple configuration(const std::string& tag);
// L = (0,inf), L_B = (1.6,2.5) so the square-root fan line of B is (1,4); L_A = (a,b) crosses
// that fan line at acute angle phi, with b searched in (lo, 1.6).
LineTriple crossing_configuration(double phi, double a = 0.5, double lo = 1.0);
// Three pairwise disjoint, mutually facing lines.
LineTriple random_hhh(std::mt19937_64& rng, double min_gap = 0.15);

}  // namespace fixtures
