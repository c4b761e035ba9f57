#pragma once

#include "overlap/general_polygon.hpp"

#include <utility>
#include <vector>

namespace overlap {

// Exact area of P ∩ (Q + τ) for polygons whose edges are horizontal,
// vertical or of slope -1.  Both polygons are cut into vertical trapezoids
// on the integer lattice of step 1/L; every clip vertex stays on that lattice.
class GeneralAreaEvaluator {
 public:
  // extra_den: additional denominator that translations may carry
  GeneralAreaEvaluator(const GeneralPolygon& P, const GeneralPolygon& Q, const BigInt& extra_den = 1);

  const BigInt& scale() const { return L_; }
  // 2 * L^2 * area for τ = (tx/L, ty/L)
  Wide twice_area_scaled(i128 tx, i128 ty) const;
  Rational area(const Rational& tx, const Rational& ty) const;  // τ·L must be integral
  Rational area_lattice(i128 tx, i128 ty) const;
  // nonempty pieces of the intersection, in polygon coordinates
  std::vector<std::vector<std::pair<Rational, Rational>>> pieces(i128 tx, i128 ty) const;

  struct Trap {
    i128 x0, x1, yb0, yb1, yt0, yt1;
    double lx, hx, ly, hy;
  };
  const std::vector<Trap>& traps_p() const { return tp_; }
  const std::vector<Trap>& traps_q() const { return tq_; }
  std::uint64_t clips() const { return clips_; }

 private:
  BigInt L_;
  std::vector<Trap> tp_, tq_;
  mutable std::uint64_t clips_ = 0;
};

Rational general_area_at(const GeneralPolygon& P, const GeneralPolygon& Q, const Rational& tx, const Rational& ty);

}  // namespace overlap
