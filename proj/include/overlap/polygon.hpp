#pragma once

#include "overlap/error.hpp"
#include "overlap/number.hpp"

#include <vector>

namespace overlap {

inline constexpr i64 kMaxCoord = i64(1) << 20;

struct Point {
  i64 x = 0, y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

struct Rect {
  i64 l = 0, r = 0, b = 0, t = 0;
  i128 area() const { return i128(r - l) * (t - b); }
  friend bool operator==(const Rect&, const Rect&) = default;
};

// Validated, CCW, no collinear triples, no zero-length edges.
struct OrthoPolygon {
  std::vector<Point> vertices;
  size_t size() const { return vertices.size(); }
};

OrthoPolygon validate_polygon(std::vector<Point> vertices);
i128 polygon_area(const OrthoPolygon& p);
std::vector<Rect> decompose_rectangles(const OrthoPolygon& p);

enum class PointClass { Outside, Boundary, Inside };
PointClass classify_point(const OrthoPolygon& p, Point q);

Rect bounding_box(const OrthoPolygon& p);
OrthoPolygon translate(const OrthoPolygon& p, i64 dx, i64 dy);

}  // namespace overlap
