#pragma once

#include "overlap/polygon.hpp"

#include <vector>

namespace overlap {

struct RPoint {
  Rational x, y;
  friend bool operator==(const RPoint&, const RPoint&) = default;
};

// Simple CCW polygon with rational vertices; every edge is horizontal,
// vertical, or of slope -1.
struct GeneralPolygon {
  std::vector<RPoint> vertices;
  size_t size() const { return vertices.size(); }
};

GeneralPolygon make_general_polygon(std::vector<RPoint> vertices);
GeneralPolygon to_general(const OrthoPolygon& p);
Rational general_area(const GeneralPolygon& p);

// lcm of all coordinate denominators
BigInt common_denominator(const std::vector<RPoint>& pts);

}  // namespace overlap
