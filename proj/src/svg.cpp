#include "overlap/svg.hpp"

#include "overlap/general_area.hpp"

#include <algorithm>
#include <boost/integer/common_factor_rt.hpp>
#include <cstdio>

namespace overlap {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v == 0 ? 0.0 : v);
  return buf;
}

std::string path(const std::vector<std::pair<double, double>>& pts) {
  std::string d;
  for (size_t i = 0; i < pts.size(); ++i) {
    d += (i ? " L " : "M ");
    d += num(pts[i].first) + " " + num(-pts[i].second);
  }
  return d + " Z";
}

std::vector<std::pair<double, double>> to_double(const GeneralPolygon& p, const Rational& tx, const Rational& ty) {
  std::vector<std::pair<double, double>> out;
  for (const RPoint& v : p.vertices)
    out.push_back({static_cast<double>(v.x + tx), static_cast<double>(v.y + ty)});
  return out;
}

}  // namespace

std::string render_svg(const GeneralPolygon& P, const GeneralPolygon& Q, const Rational& tx, const Rational& ty) {
  auto pp = to_double(P, 0, 0);
  auto qq = to_double(Q, tx, ty);
  double lx = pp[0].first, hx = lx, ly = pp[0].second, hy = ly;
  for (const auto* s : {&pp, &qq})
    for (const auto& [x, y] : *s) {
      lx = std::min(lx, x);
      hx = std::max(hx, x);
      ly = std::min(ly, y);
      hy = std::max(hy, y);
    }
  double mx = 0.05 * (hx - lx), my = 0.05 * (hy - ly);
  double vx = lx - mx, vy = -(hy + my), vw = (hx - lx) + 2 * mx, vh = (hy - ly) + 2 * my;

  BigInt extra = boost::multiprecision::lcm(denominator(tx), denominator(ty));
  GeneralAreaEvaluator ev(P, Q, extra);
  Rational sx = tx * ev.scale(), sy = ty * ev.scale();
  auto pieces = ev.pieces(to_i128(numerator(sx)), to_i128(numerator(sy)));

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(vx) + " " + num(vy) + " " + num(vw) + " " +
       num(vh) + "\" width=\"800\" height=\"" + num(std::clamp(800.0 * vh / vw, 50.0, 4000.0)) + "\" preserveAspectRatio=\"xMidYMid meet\">\n";
  s += "<g id=\"intersection\" fill=\"#f2a33a\" fill-opacity=\"0.7\" stroke=\"none\">\n";
  for (const auto& pc : pieces) {
    std::vector<std::pair<double, double>> d;
    for (const auto& [x, y] : pc) d.push_back({static_cast<double>(x), static_cast<double>(y)});
    s += "<path class=\"cell\" d=\"" + path(d) + "\"/>\n";
  }
  s += "</g>\n";
  s += "<path id=\"P\" d=\"" + path(pp) + "\" fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\"/>\n";
  s += "<path id=\"Q\" d=\"" + path(qq) + "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\"/>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace overlap
