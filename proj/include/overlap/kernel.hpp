#pragma once

#include "overlap/polygon.hpp"

#include <string>
#include <vector>

namespace overlap {

// A + Bx + Cy + Dxy on [l,r) x [b,t)
struct BilinearPiece {
  i64 l, r, b, t;
  i128 A, B, C, D;
};

// weights A + Bx + Cy + Dxy on [l,r) x [b,inf)
struct TranslationSlab {
  i64 l, r, b;
  i128 A, B, C, D;
};

struct SlabSet {
  std::vector<TranslationSlab> slabs;
  size_t rects_p = 0, rects_q = 0;
};

struct CandidateGrid {
  std::vector<i64> X, Y;
  size_t index_x(i64 x) const;  // throws QueryOffGrid
  size_t index_y(i64 y) const;
};

std::vector<BilinearPiece> rect_pair_pieces(const Rect& p, const Rect& q);
std::vector<TranslationSlab> rect_pair_slabs(const Rect& p, const Rect& q);
SlabSet build_translation_slabs(const std::vector<Rect>& rp, const std::vector<Rect>& rq);
SlabSet build_translation_slabs(const OrthoPolygon& P, const OrthoPolygon& Q);
CandidateGrid candidate_grid(const OrthoPolygon& P, const OrthoPolygon& Q);

inline i128 eval_bilinear(i128 A, i128 B, i128 C, i128 D, i128 x, i128 y) {
  return A + B * x + C * y + D * x * y;
}
// value at (xn/den, yn/den), scaled by den^2
inline i128 eval_bilinear_scaled(i128 A, i128 B, i128 C, i128 D, i128 xn, i128 yn, i128 den) {
  return A * den * den + B * xn * den + C * yn * den + D * xn * yn;
}

bool slab_contains(const TranslationSlab& s, i64 x, i64 y);
bool piece_contains(const BilinearPiece& p, i64 x, i64 y);

std::string format_slabs_tsv(const SlabSet& s);

}  // namespace overlap
