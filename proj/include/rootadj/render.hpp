#pragma once

#include <string>

#include "rootadj/root_adjunction.hpp"

namespace rootadj {

// SVG of the hexagon in the disc model, with optional fan lines. One <path> per proper side and fan line.
std::string render_svg(const HexagonConfig& h, const RootLineFan* fan = nullptr);

}  // namespace rootadj
