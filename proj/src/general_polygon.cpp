#include "overlap/general_polygon.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <algorithm>

namespace overlap {

namespace {

struct IP {
  i128 x, y;
  friend bool operator==(const IP&, const IP&) = default;
  friend auto operator<=>(const IP&, const IP&) = default;
};

int orient(const IP& a, const IP& b, const IP& c) {
  Wide v = to_wide(b.x - a.x) * to_wide(c.y - a.y) - to_wide(b.y - a.y) * to_wide(c.x - a.x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

bool on_segment(const IP& a, const IP& b, const IP& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_meet(const IP& a, const IP& b, const IP& c, const IP& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
         (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

}  // namespace

BigInt common_denominator(const std::vector<RPoint>& pts) {
  BigInt l = 1;
  for (const RPoint& p : pts) {
    l = boost::multiprecision::lcm(l, denominator(p.x));
    l = boost::multiprecision::lcm(l, denominator(p.y));
  }
  return l;
}

GeneralPolygon make_general_polygon(std::vector<RPoint> v) {
  if (v.empty()) throw OverlapError(ErrorCode::EmptyInput, "no vertices");
  if (v.size() >= 2 && v.front() == v.back()) v.pop_back();
  v.erase(std::unique(v.begin(), v.end()), v.end());
  while (v.size() >= 2 && v.front() == v.back()) v.pop_back();
  if (v.size() < 3) throw OverlapError(ErrorCode::TooFewVertices, "fewer than 3 vertices");

  BigInt L = common_denominator(v);
  std::vector<IP> s;
  s.reserve(v.size());
  static const BigInt lim = BigInt(1) << 100;
  for (const RPoint& p : v) {
    BigInt x = numerator(p.x) * (L / denominator(p.x));
    BigInt y = numerator(p.y) * (L / denominator(p.y));
    if (abs(x) > lim || abs(y) > lim)
      throw OverlapError(ErrorCode::CoordinateOutOfRange, "scaled coordinate exceeds 2^100");
    s.push_back({to_i128(x), to_i128(y)});
  }
  size_t n = s.size();
  for (size_t i = 0; i < n; ++i) {
    const IP& a = s[i];
    const IP& b = s[(i + 1) % n];
    i128 dx = b.x - a.x, dy = b.y - a.y;
    if (dx != 0 && dy != 0 && dx != -dy)
      throw OverlapError(ErrorCode::NotClosedOrthogonal,
                         "edge " + std::to_string(i) + " is not horizontal, vertical or anti-diagonal");
  }
  // drop collinear middle vertices
  bool changed = true;
  while (changed && s.size() >= 3) {
    changed = false;
    for (size_t i = 0; i < s.size(); ++i) {
      size_t m = s.size();
      const IP& a = s[(i + m - 1) % m];
      const IP& b = s[i];
      const IP& c = s[(i + 1) % m];
      if (orient(a, b, c) == 0) {
        Wide dot = to_wide(b.x - a.x) * to_wide(c.x - b.x) + to_wide(b.y - a.y) * to_wide(c.y - b.y);
        if (dot < 0) throw OverlapError(ErrorCode::NonSimpleInput, "edge doubles back on itself");
        s.erase(s.begin() + long(i));
        v.erase(v.begin() + long(i));
        changed = true;
        break;
      }
    }
  }
  n = s.size();
  if (n < 3) throw OverlapError(ErrorCode::DegenerateArea, "zero area");
  std::vector<IP> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw OverlapError(ErrorCode::NonSimpleInput, "repeated vertex");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_meet(s[i], s[(i + 1) % n], s[j], s[(j + 1) % n]))
        throw OverlapError(ErrorCode::NonSimpleInput,
                           "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
    }
  Wide a2 = 0;
  for (size_t i = 0; i < n; ++i) {
    const IP& a = s[i];
    const IP& b = s[(i + 1) % n];
    a2 += to_wide(a.x) * to_wide(b.y) - to_wide(b.x) * to_wide(a.y);
  }
  if (a2 == 0) throw OverlapError(ErrorCode::DegenerateArea, "zero area");
  if (a2 < 0) std::reverse(v.begin(), v.end());
  return GeneralPolygon{std::move(v)};
}

GeneralPolygon to_general(const OrthoPolygon& p) {
  GeneralPolygon g;
  for (const Point& q : p.vertices) g.vertices.push_back({Rational(q.x), Rational(q.y)});
  return g;
}

Rational general_area(const GeneralPolygon& p) {
  Rational s = 0;
  const auto& v = p.vertices;
  for (size_t i = 0, n = v.size(); i < n; ++i) {
    const RPoint& a = v[i];
    const RPoint& b = v[(i + 1) % n];
    s += a.x * b.y - b.x * a.y;
  }
  return s / 2;
}

}  // namespace overlap
