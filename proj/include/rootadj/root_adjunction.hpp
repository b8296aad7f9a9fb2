#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootadj/hexagon.hpp"

namespace rootadj {

enum class Role { A, B };
std::string to_string(Role r);

// Exit of a fan line through the hexagon, in the order met as s grows.
enum class ExitTag { InteriorAxY, VertexAxY_LY, InteriorLY, VertexLY_AxXinvY, InteriorAxXinvY, ClosureLX };
std::string to_string(ExitTag t);

struct ExitSide {
  ExitTag tag = ExitTag::InteriorAxY;
  bool boundary_vertex = false;
  bool borderline = false;
};

struct FanLine {
  long s = 0;
  ProperGeodesic line;
  ExitSide exit;
};

struct RootLineFan {
  Role role = Role::B;
  long n = 1;
  IsometryMatrix root;  // X^{1/n}
  std::vector<FanLine> lines;  // s = 1..s_max
  std::vector<std::pair<long, long>> splitting;
};

// Which sides play the parts of X and Y for a given rooted generator.
struct RootedView {
  IsometryMatrix x, y;
  SideIndex ax_x, line_x, ax_y, line_y;
  int vertex_y_ly;   // Ax_Y n L_Y
  int vertex_ly_xy;  // L_Y n Ax_{X^-1 Y}
  ElementClass x_class, y_class, xy_class;
};

RootedView rooted_view(const HexagonConfig& h, Role role);

// X^{1/n} on the branch whose fan sweeps the interior of the hexagon.
IsometryMatrix fan_root(const HexagonConfig& h, Role role, long n, const Tolerances& tol = {});
RootLineFan root_line_fan(const HexagonConfig& h, Role role, long s_max, long n, const Tolerances& tol = {});
ExitSide exit_side(const HexagonConfig& h, Role role, const ProperGeodesic& line, const Tolerances& tol = {});

enum class Outcome { DiscreteFree, DiscreteNotFree, NotDiscrete, NeedsEllipticAlgorithm };
std::string to_string(Outcome o);

struct Verdict {
  Outcome outcome = Outcome::DiscreteFree;
  std::string clause;
  std::vector<std::string> flags;
  std::optional<std::pair<IsometryMatrix, IsometryMatrix>> reduced_pair;
  std::optional<IsometryMatrix> elliptic;  // the product forcing the elliptic case
  std::vector<long> crossings;             // k with L_{X^{k/n}} crossing L_Y, 0 <= k <= n

  bool borderline() const;
};

// How to read the corner clause when X^{-1}Y is elliptic.
enum class CornerRule {
  AxisExit,   // every fan line meets Ax_Y (default)
  AxisAvoid,  // no fan line meets Ax_Y
};

struct DecideOptions {
  Tolerances tol;
  CornerRule corner_rule = CornerRule::AxisExit;
};

Verdict base_verdict(const HexagonConfig& h);
Verdict decide_adjoin(const HexagonConfig& h, Role role, long s, long n, const DecideOptions& opt = {});

struct PowerSplit {
  long w = 0, r = 0;
};
PowerSplit reduce_rational_power(long s, long n);

// Handles s > n by passing to the pair with X replaced by X^w.
Verdict decide_rational_power(const HexagonConfig& h, Role role, long s, long n, const DecideOptions& opt = {});

}  // namespace rootadj
