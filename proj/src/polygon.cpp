#include "overlap/polygon.hpp"

#include <algorithm>
#include <map>

namespace overlap {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotClosedOrthogonal: return "NotClosedOrthogonal";
    case ErrorCode::SelfIntersecting: return "SelfIntersecting";
    case ErrorCode::DegenerateArea: return "DegenerateArea";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::CoordinateOutOfRange: return "CoordinateOutOfRange";
    case ErrorCode::QueryOffGrid: return "QueryOffGrid";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::NonSimpleInput: return "NonSimpleInput";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

int sgn(i64 v) { return (v > 0) - (v < 0); }

// prev -> cur -> next on one axis line
bool collinear(Point a, Point b, Point c) {
  return (a.x == b.x && b.x == c.x) || (a.y == b.y && b.y == c.y);
}

bool reverses(Point a, Point b, Point c) {
  return sgn(b.x - a.x) * sgn(c.x - b.x) < 0 || sgn(b.y - a.y) * sgn(c.y - b.y) < 0;
}

void drop_collinear(std::vector<Point>& v) {
  std::vector<Point> out;
  out.reserve(v.size());
  for (const Point& p : v) {
    while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), p)) {
      if (reverses(out[out.size() - 2], out.back(), p))
        throw OverlapError(ErrorCode::SelfIntersecting, "edge doubles back on itself");
      out.pop_back();
    }
    out.push_back(p);
  }
  // wrap-around junction
  bool changed = true;
  while (changed && out.size() >= 3) {
    changed = false;
    size_t n = out.size();
    if (collinear(out[n - 2], out[n - 1], out[0])) {
      if (reverses(out[n - 2], out[n - 1], out[0]))
        throw OverlapError(ErrorCode::SelfIntersecting, "edge doubles back on itself");
      out.pop_back();
      changed = true;
    } else if (collinear(out[n - 1], out[0], out[1])) {
      if (reverses(out[n - 1], out[0], out[1]))
        throw OverlapError(ErrorCode::SelfIntersecting, "edge doubles back on itself");
      out.erase(out.begin());
      changed = true;
    }
  }
  v.swap(out);
}

bool segments_touch(Point a, Point b, Point c, Point d) {
  return std::max(std::min(a.x, b.x), std::min(c.x, d.x)) <= std::min(std::max(a.x, b.x), std::max(c.x, d.x)) &&
         std::max(std::min(a.y, b.y), std::min(c.y, d.y)) <= std::min(std::max(a.y, b.y), std::max(c.y, d.y));
}

i128 twice_area(const std::vector<Point>& v) {
  i128 s = 0;
  for (size_t i = 0, n = v.size(); i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    s += i128(a.x) * b.y - i128(b.x) * a.y;
  }
  return s;
}

}  // namespace

OrthoPolygon validate_polygon(std::vector<Point> v) {
  if (v.empty()) throw OverlapError(ErrorCode::EmptyInput, "no vertices");
  if (v.size() >= 2 && v.front() == v.back()) v.pop_back();
  for (const Point& p : v)
    if (p.x > kMaxCoord || p.x < -kMaxCoord || p.y > kMaxCoord || p.y < -kMaxCoord)
      throw OverlapError(ErrorCode::CoordinateOutOfRange, "coordinate magnitude exceeds 2^20");
  v.erase(std::unique(v.begin(), v.end()), v.end());
  while (v.size() >= 2 && v.front() == v.back()) v.pop_back();
  if (v.size() < 2) throw OverlapError(ErrorCode::TooFewVertices, "fewer than 4 vertices");
  for (size_t i = 0, n = v.size(); i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    if (a.x != b.x && a.y != b.y)
      throw OverlapError(ErrorCode::NotClosedOrthogonal,
                         "edge " + std::to_string(i) + " is neither horizontal nor vertical");
  }
  drop_collinear(v);
  if (v.size() < 4) throw OverlapError(ErrorCode::TooFewVertices, "fewer than 4 vertices");

  std::vector<Point> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw OverlapError(ErrorCode::SelfIntersecting, "repeated vertex");

  size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_touch(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
        throw OverlapError(ErrorCode::SelfIntersecting,
                           "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
    }
  }
  i128 a2 = twice_area(v);
  if (a2 == 0) throw OverlapError(ErrorCode::DegenerateArea, "zero area");
  if (a2 < 0) std::reverse(v.begin(), v.end());
  return OrthoPolygon{std::move(v)};
}

i128 polygon_area(const OrthoPolygon& p) { return twice_area(p.vertices) / 2; }

std::vector<Rect> decompose_rectangles(const OrthoPolygon& p) {
  struct HEdge {
    i64 y, a, b;
  };
  std::vector<HEdge> hs;
  const auto& v = p.vertices;
  for (size_t i = 0, n = v.size(); i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    if (a.y == b.y) hs.push_back({a.y, std::min(a.x, b.x), std::max(a.x, b.x)});
  }
  std::sort(hs.begin(), hs.end(), [](const HEdge& u, const HEdge& w) {
    return u.y != w.y ? u.y < w.y : u.a < w.a;
  });

  struct Active {
    i64 r, y0;
  };
  std::map<i64, Active> active;  // keyed by left x
  std::vector<Rect> out;
  std::vector<i64> ends;
  for (size_t g = 0; g < hs.size();) {
    size_t h = g;
    i64 y = hs[g].y;
    while (h < hs.size() && hs[h].y == y) ++h;
    ends.clear();
    for (size_t k = g; k < h; ++k) {
      ends.push_back(hs[k].a);
      ends.push_back(hs[k].b);
      auto it = active.upper_bound(hs[k].b);
      while (it != active.begin()) {
        auto prev = std::prev(it);
        if (prev->second.r < hs[k].a) break;
        out.push_back(Rect{prev->first, prev->second.r, prev->second.y0, y});
        ends.push_back(prev->first);
        ends.push_back(prev->second.r);
        active.erase(prev);
      }
    }
    std::sort(ends.begin(), ends.end());
    std::vector<i64> odd;
    for (size_t i = 0; i < ends.size();) {
      size_t j = i;
      while (j < ends.size() && ends[j] == ends[i]) ++j;
      if ((j - i) % 2 == 1) odd.push_back(ends[i]);
      i = j;
    }
    for (size_t i = 0; i + 1 < odd.size(); i += 2) active[odd[i]] = Active{odd[i + 1], y};
    g = h;
  }
  return out;
}

PointClass classify_point(const OrthoPolygon& p, Point q) {
  const auto& v = p.vertices;
  bool inside = false;
  for (size_t i = 0, n = v.size(); i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    if (segments_touch(a, b, q, q)) return PointClass::Boundary;
    if (a.x == b.x && a.x > q.x) {
      i64 lo = std::min(a.y, b.y), hi = std::max(a.y, b.y);
      if (q.y >= lo && q.y < hi) inside = !inside;
    }
  }
  return inside ? PointClass::Inside : PointClass::Outside;
}

Rect bounding_box(const OrthoPolygon& p) {
  Rect r{p.vertices[0].x, p.vertices[0].x, p.vertices[0].y, p.vertices[0].y};
  for (const Point& q : p.vertices) {
    r.l = std::min(r.l, q.x);
    r.r = std::max(r.r, q.x);
    r.b = std::min(r.b, q.y);
    r.t = std::max(r.t, q.y);
  }
  return r;
}

OrthoPolygon translate(const OrthoPolygon& p, i64 dx, i64 dy) {
  OrthoPolygon out = p;
  for (Point& q : out.vertices) {
    q.x += dx;
    q.y += dy;
  }
  return out;
}

}  // namespace overlap
