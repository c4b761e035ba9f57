#include "overlap/general_area.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <algorithm>
#include <cmath>

namespace overlap {

namespace {

using Trap = GeneralAreaEvaluator::Trap;

struct IP {
  i128 x, y;
};

std::vector<IP> scale_points(const GeneralPolygon& p, const BigInt& L) {
  static const BigInt lim = BigInt(1) << 100;
  std::vector<IP> out;
  out.reserve(p.size());
  for (const RPoint& v : p.vertices) {
    BigInt x = numerator(v.x) * (L / denominator(v.x));
    BigInt y = numerator(v.y) * (L / denominator(v.y));
    if (abs(x) > lim || abs(y) > lim)
      throw OverlapError(ErrorCode::CoordinateOutOfRange, "scaled coordinate exceeds 2^100");
    out.push_back({to_i128(x), to_i128(y)});
  }
  return out;
}

// y on the non-vertical edge a-b at abscissa x (slope 0 or -1, so exact)
i128 edge_y(const IP& a, const IP& b, i128 x) {
  if (a.y == b.y) return a.y;
  return a.y - (x - a.x);
}

std::vector<Trap> trapezoids(const std::vector<IP>& v) {
  std::vector<i128> xs;
  for (const IP& p : v) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Trap> out;
  struct Cut {
    i128 y0, y1;
  };
  std::vector<Cut> cuts;
  size_t n = v.size();
  for (size_t s = 0; s + 1 < xs.size(); ++s) {
    i128 xa = xs[s], xb = xs[s + 1];
    cuts.clear();
    for (size_t i = 0; i < n; ++i) {
      const IP& a = v[i];
      const IP& b = v[(i + 1) % n];
      if (a.x == b.x) continue;
      if (std::min(a.x, b.x) <= xa && std::max(a.x, b.x) >= xb) cuts.push_back({edge_y(a, b, xa), edge_y(a, b, xb)});
    }
    std::sort(cuts.begin(), cuts.end(), [](const Cut& p, const Cut& q) { return p.y0 + p.y1 < q.y0 + q.y1; });
    for (size_t k = 0; k + 1 < cuts.size(); k += 2) {
      Trap t{xa, xb, cuts[k].y0, cuts[k].y1, cuts[k + 1].y0, cuts[k + 1].y1, 0, 0, 0, 0};
      t.lx = double(xa);
      t.hx = double(xb);
      t.ly = double(std::min(t.yb0, t.yb1));
      t.hy = double(std::max(t.yt0, t.yt1));
      out.push_back(t);
    }
  }
  return out;
}

struct HalfPlane {
  int a, b;  // a*x + b*y <= c
  i128 c;
};

int sgn(i128 v) { return (v > 0) - (v < 0); }

// clip in place against a*x + b*y <= c
void clip(std::vector<IP>& poly, std::vector<IP>& tmp, const HalfPlane& h) {
  tmp.clear();
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const IP& p = poly[i];
    const IP& q = poly[(i + 1) % n];
    i128 fp = h.a * p.x + h.b * p.y - h.c;
    i128 fq = h.a * q.x + h.b * q.y - h.c;
    if (fp <= 0) tmp.push_back(p);
    if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) {
      int dx = sgn(q.x - p.x), dy = sgn(q.y - p.y);
      int dot = h.a * dx + h.b * dy;  // +-1 for the three admissible directions
      i128 t = -fp * dot;
      tmp.push_back({p.x + dx * t, p.y + dy * t});
    }
  }
  poly.swap(tmp);
}

Wide twice_area(const std::vector<IP>& poly) {
  if (poly.size() < 3) return 0;
  Wide s = 0;
  const IP& o = poly[0];
  for (size_t i = 1; i + 1 < poly.size(); ++i) {
    i128 ax = poly[i].x - o.x, ay = poly[i].y - o.y;
    i128 bx = poly[i + 1].x - o.x, by = poly[i + 1].y - o.y;
    s += Wide(ax) * Wide(by) - Wide(ay) * Wide(bx);
  }
  return s;
}

}  // namespace

GeneralAreaEvaluator::GeneralAreaEvaluator(const GeneralPolygon& P, const GeneralPolygon& Q, const BigInt& extra_den) {
  L_ = boost::multiprecision::lcm(common_denominator(P.vertices), common_denominator(Q.vertices));
  L_ = boost::multiprecision::lcm(L_, extra_den);
  tp_ = trapezoids(scale_points(P, L_));
  tq_ = trapezoids(scale_points(Q, L_));
}

namespace {

bool bbox_apart(const Trap& q, const Trap& p, double dx, double dy) {
  const double qlx = q.lx + dx, qhx = q.hx + dx, qly = q.ly + dy, qhy = q.hy + dy;
  const double slack = 1e-9 * (std::fabs(qlx) + std::fabs(qhx) + std::fabs(qly) + std::fabs(qhy)) + 4;
  return qhx + slack < p.lx || p.hx + slack < qlx || qhy + slack < p.ly || p.hy + slack < qly;
}

// (q + τ) ∩ p left in poly
void clip_pair(const Trap& q, const Trap& p, i128 tx, i128 ty, std::vector<IP>& poly, std::vector<IP>& tmp) {
  poly.clear();
  poly.push_back({q.x0 + tx, q.yb0 + ty});
  poly.push_back({q.x1 + tx, q.yb1 + ty});
  if (q.yt1 != q.yb1) poly.push_back({q.x1 + tx, q.yt1 + ty});
  if (q.yt0 != q.yb0) poly.push_back({q.x0 + tx, q.yt0 + ty});
  clip(poly, tmp, {-1, 0, -p.x0});
  if (poly.size() >= 3) clip(poly, tmp, {1, 0, p.x1});
  if (poly.size() >= 3) {
    if (p.yb0 == p.yb1) clip(poly, tmp, {0, -1, -p.yb0});
    else clip(poly, tmp, {-1, -1, -(p.x0 + p.yb0)});
  }
  if (poly.size() >= 3) {
    if (p.yt0 == p.yt1) clip(poly, tmp, {0, 1, p.yt0});
    else clip(poly, tmp, {1, 1, p.x0 + p.yt0});
  }
}

}  // namespace

Wide GeneralAreaEvaluator::twice_area_scaled(i128 tx, i128 ty) const {
  const double dx = double(tx), dy = double(ty);
  Wide total = 0;
  std::vector<IP> poly, tmp;
  poly.reserve(12);
  tmp.reserve(12);
  for (const Trap& q : tq_)
    for (const Trap& p : tp_) {
      if (bbox_apart(q, p, dx, dy)) continue;
      ++clips_;
      clip_pair(q, p, tx, ty, poly, tmp);
      total += twice_area(poly);
    }
  return total;
}

std::vector<std::vector<std::pair<Rational, Rational>>> GeneralAreaEvaluator::pieces(i128 tx, i128 ty) const {
  std::vector<std::vector<std::pair<Rational, Rational>>> out;
  std::vector<IP> poly, tmp;
  for (const Trap& q : tq_)
    for (const Trap& p : tp_) {
      if (bbox_apart(q, p, double(tx), double(ty))) continue;
      clip_pair(q, p, tx, ty, poly, tmp);
      if (twice_area(poly) == 0) continue;
      std::vector<std::pair<Rational, Rational>> pc;
      for (const IP& v : poly) pc.push_back({Rational(to_big(v.x), L_), Rational(to_big(v.y), L_)});
      out.push_back(std::move(pc));
    }
  return out;
}

Rational GeneralAreaEvaluator::area_lattice(i128 tx, i128 ty) const {
  return Rational(BigInt(twice_area_scaled(tx, ty)), 2 * L_ * L_);
}

Rational GeneralAreaEvaluator::area(const Rational& tx, const Rational& ty) const {
  Rational sx = tx * L_, sy = ty * L_;
  if (denominator(sx) != 1 || denominator(sy) != 1)
    throw std::invalid_argument("translation is not on the evaluator lattice");
  return area_lattice(to_i128(numerator(sx)), to_i128(numerator(sy)));
}

Rational general_area_at(const GeneralPolygon& P, const GeneralPolygon& Q, const Rational& tx, const Rational& ty) {
  BigInt extra = boost::multiprecision::lcm(denominator(tx), denominator(ty));
  return GeneralAreaEvaluator(P, Q, extra).area(tx, ty);
}

}  // namespace overlap
