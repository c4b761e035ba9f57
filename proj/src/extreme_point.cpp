#include "overlap/extreme_point.hpp"

#include "overlap/detail/hull3.hpp"
#include "overlap/error.hpp"

#include <algorithm>

namespace overlap {

namespace {
constexpr size_t kTopSize = 8;
constexpr size_t kMaxRemovalDegree = 8;
}  // namespace

bool EPIndex::better(int a, int b, i128 d1, i128 d2) const {
  i128 va = lifted_dot(pts_[a], d1, d2), vb = lifted_dot(pts_[b], d1, d2);
  return va > vb || (va == vb && pts_[a].tag < pts_[b].tag);
}

EPIndex ep_build(const std::vector<LiftedPoint>& points, size_t linear_threshold) {
  if (points.empty()) throw OverlapError(ErrorCode::EmptyInput, "extreme-point index needs at least one point");
  EPIndex ix;
  ix.pts_ = points;
  auto& P = ix.pts_;
  std::sort(P.begin(), P.end(), [](const LiftedPoint& a, const LiftedPoint& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    if (a.w != b.w) return a.w < b.w;
    return a.tag < b.tag;
  });
  P.erase(std::unique(P.begin(), P.end(),
                      [](const LiftedPoint& a, const LiftedPoint& b) { return a.u == b.u && a.v == b.v && a.w == b.w; }),
          P.end());
  ix.build_ops_ = P.size();
  if (P.size() <= linear_threshold) {
    ix.linear_ = true;
    return ix;
  }

  std::vector<detail::P3> q;
  q.reserve(P.size());
  for (const LiftedPoint& p : P) q.push_back({p.u, p.v, p.w});
  std::vector<int> ids(P.size());
  for (size_t i = 0; i < P.size(); ++i) ids[i] = int(i);
  if (!detail::orientation_safe(q, ids)) {
    ix.linear_ = true;
    return ix;
  }

  std::uint64_t seed = 0x9e3779b97f4a7c15ULL ^ P.size();
  auto make_level = [&](const std::vector<int>& subset) {
    detail::HullGraph g = detail::hull_graph(q, subset, seed, ix.build_ops_);
    EPIndex::Level lv;
    lv.verts = std::move(g.verts);
    lv.adj = std::move(g.adj);
    lv.local.assign(P.size(), -1);
    for (size_t i = 0; i < lv.verts.size(); ++i) lv.local[size_t(lv.verts[i])] = int(i);
    return lv;
  };
  ix.levels_.push_back(make_level(ids));
  std::vector<char> blocked(P.size(), 0);
  while (ix.levels_.back().verts.size() > kTopSize) {
    const EPIndex::Level& cur = ix.levels_.back();
    std::fill(blocked.begin(), blocked.end(), 0);
    std::vector<char> removed(P.size(), 0);
    size_t nrem = 0;
    for (size_t i = 0; i < cur.verts.size(); ++i) {
      int v = cur.verts[i];
      if (blocked[size_t(v)] || cur.adj[i].size() > kMaxRemovalDegree) continue;
      removed[size_t(v)] = 1;
      ++nrem;
      blocked[size_t(v)] = 1;
      for (int w : cur.adj[i]) blocked[size_t(w)] = 1;
    }
    if (nrem == 0) break;
    std::vector<int> keep;
    for (int v : cur.verts)
      if (!removed[size_t(v)]) keep.push_back(v);
    ix.build_ops_ += cur.verts.size();
    EPIndex::Level next = make_level(keep);
    if (next.verts.size() >= cur.verts.size()) break;
    ix.levels_.push_back(std::move(next));
  }
  return ix;
}

EPResult EPIndex::query(i128 d1, i128 d2, std::uint64_t* steps) const {
  std::uint64_t st = 0;
  int best = 0;
  if (linear_) {
    for (size_t i = 1; i < pts_.size(); ++i)
      if (better(int(i), best, d1, d2)) best = int(i);
    st = pts_.size();
  } else {
    const Level& top = levels_.back();
    best = top.verts[0];
    for (int v : top.verts)
      if (better(v, best, d1, d2)) best = v;
    st += top.verts.size();
    for (size_t li = levels_.size() - 1; li-- > 0;) {
      const Level& lv = levels_[li];
      for (;;) {
        const std::vector<int>& nb = lv.adj[size_t(lv.local[size_t(best)])];
        int cand = best;
        for (int w : nb)
          if (better(w, cand, d1, d2)) cand = w;
        st += nb.size();
        if (cand == best) break;
        best = cand;
      }
    }
  }
  if (steps) *steps += st;
  return EPResult{pts_[size_t(best)], lifted_dot(pts_[size_t(best)], d1, d2)};
}

EPResult ep_query(const EPIndex& index, i128 d1, i128 d2) { return index.query(d1, d2); }

EPResult linear_scan_max(const std::vector<LiftedPoint>& points, i128 d1, i128 d2) {
  if (points.empty()) throw OverlapError(ErrorCode::EmptyInput, "empty point set");
  size_t best = 0;
  i128 bv = lifted_dot(points[0], d1, d2);
  for (size_t i = 1; i < points.size(); ++i) {
    i128 v = lifted_dot(points[i], d1, d2);
    if (v > bv || (v == bv && points[i].tag < points[best].tag)) {
      best = i;
      bv = v;
    }
  }
  return EPResult{points[best], bv};
}

}  // namespace overlap
