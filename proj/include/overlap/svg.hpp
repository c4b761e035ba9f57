#pragma once

#include "overlap/general_polygon.hpp"

#include <string>

namespace overlap {

// P outlined, Q + τ outlined, P ∩ (Q + τ) shaded; y axis points up.
std::string render_svg(const GeneralPolygon& P, const GeneralPolygon& Q, const Rational& tx, const Rational& ty);

}  // namespace overlap
