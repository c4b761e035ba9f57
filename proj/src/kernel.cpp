#include "overlap/kernel.hpp"

#include <algorithm>

namespace overlap {

namespace {

struct Seg {
  i64 lo, hi;
  i128 a, b;  // a + b*t
};

// overlap length of [lp,rp] and [lq+t, rq+t] as a function of t
int convolve(i64 lp, i64 rp, i64 lq, i64 rq, Seg out[3]) {
  i64 x0 = lp - rq;
  i64 x1 = std::min(lp - lq, rp - rq);
  i64 x2 = std::max(lp - lq, rp - rq);
  i64 x3 = rp - lq;
  int k = 0;
  if (x0 < x1) out[k++] = {x0, x1, i128(rq) - lp, 1};
  if (x1 < x2) out[k++] = {x1, x2, i128(std::min(rp - lp, rq - lq)), 0};
  if (x2 < x3) out[k++] = {x2, x3, i128(rp) - lq, -1};
  return k;
}

std::vector<i64> differences(const std::vector<Point>& a, const std::vector<Point>& b, bool use_x) {
  std::vector<i64> pa, pb;
  for (const Point& p : a) pa.push_back(use_x ? p.x : p.y);
  for (const Point& p : b) pb.push_back(use_x ? p.x : p.y);
  std::sort(pa.begin(), pa.end());
  pa.erase(std::unique(pa.begin(), pa.end()), pa.end());
  std::sort(pb.begin(), pb.end());
  pb.erase(std::unique(pb.begin(), pb.end()), pb.end());
  std::vector<i64> out;
  out.reserve(pa.size() * pb.size());
  for (i64 u : pa)
    for (i64 v : pb) out.push_back(u - v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

size_t index_in(const std::vector<i64>& v, i64 x, const char* axis) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x)
    throw OverlapError(ErrorCode::QueryOffGrid, std::string(axis) + "=" + std::to_string(x) + " not in grid");
  return size_t(it - v.begin());
}

}  // namespace

size_t CandidateGrid::index_x(i64 x) const { return index_in(X, x, "x"); }
size_t CandidateGrid::index_y(i64 y) const { return index_in(Y, y, "y"); }

std::vector<BilinearPiece> rect_pair_pieces(const Rect& p, const Rect& q) {
  Seg sx[3], sy[3];
  int nx = convolve(p.l, p.r, q.l, q.r, sx);
  int ny = convolve(p.b, p.t, q.b, q.t, sy);
  std::vector<BilinearPiece> out;
  out.reserve(size_t(nx * ny));
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      out.push_back({sx[i].lo, sx[i].hi, sy[j].lo, sy[j].hi, sx[i].a * sy[j].a, sx[i].b * sy[j].a,
                     sx[i].a * sy[j].b, sx[i].b * sy[j].b});
  return out;
}

std::vector<TranslationSlab> rect_pair_slabs(const Rect& p, const Rect& q) {
  std::vector<TranslationSlab> out;
  for (const BilinearPiece& c : rect_pair_pieces(p, q)) {
    out.push_back({c.l, c.r, c.b, c.A, c.B, c.C, c.D});
    out.push_back({c.l, c.r, c.t, -c.A, -c.B, -c.C, -c.D});
  }
  return out;
}

SlabSet build_translation_slabs(const std::vector<Rect>& rp, const std::vector<Rect>& rq) {
  SlabSet s;
  s.rects_p = rp.size();
  s.rects_q = rq.size();
  s.slabs.reserve(18 * rp.size() * rq.size());
  for (const Rect& a : rp)
    for (const Rect& b : rq)
      for (const TranslationSlab& t : rect_pair_slabs(a, b)) s.slabs.push_back(t);
  return s;
}

SlabSet build_translation_slabs(const OrthoPolygon& P, const OrthoPolygon& Q) {
  return build_translation_slabs(decompose_rectangles(P), decompose_rectangles(Q));
}

CandidateGrid candidate_grid(const OrthoPolygon& P, const OrthoPolygon& Q) {
  return CandidateGrid{differences(P.vertices, Q.vertices, true), differences(P.vertices, Q.vertices, false)};
}

bool slab_contains(const TranslationSlab& s, i64 x, i64 y) { return s.l <= x && x < s.r && y >= s.b; }
bool piece_contains(const BilinearPiece& p, i64 x, i64 y) {
  return p.l <= x && x < p.r && p.b <= y && y < p.t;
}

std::string format_slabs_tsv(const SlabSet& s) {
  std::string out = "l\tr\tb\tA\tB\tC\tD\n";
  for (const TranslationSlab& t : s.slabs) {
    out += std::to_string(t.l) + "\t" + std::to_string(t.r) + "\t" + std::to_string(t.b) + "\t" +
           to_string(t.A) + "\t" + to_string(t.B) + "\t" + to_string(t.C) + "\t" + to_string(t.D) + "\n";
  }
  return out;
}

}  // namespace overlap
