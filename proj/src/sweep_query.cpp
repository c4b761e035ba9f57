#include "overlap/sweep_query.hpp"

#include <algorithm>
#include <numeric>

namespace overlap {

SlabSweep::SlabSweep(const SlabSet& slabs, const std::vector<i64>& X) {
  while (size_ < X.size()) size_ <<= 1;
  tree_.assign(2 * size_, CoeffQuad{});
  items_.reserve(slabs.slabs.size());
  for (const TranslationSlab& s : slabs.slabs) {
    size_t lo = size_t(std::lower_bound(X.begin(), X.end(), s.l) - X.begin());
    size_t hi = size_t(std::lower_bound(X.begin(), X.end(), s.r) - X.begin());
    if (lo < hi) items_.push_back({s.b, lo, hi, CoeffQuad{s.A, s.B, s.C, s.D}});
  }
  std::stable_sort(items_.begin(), items_.end(), [](const Item& a, const Item& b) { return a.b < b.b; });
}

void SlabSweep::add_range(size_t lo, size_t hi, const CoeffQuad& w) {
  std::uint64_t touched = 0;
  for (lo += size_, hi += size_; lo < hi; lo >>= 1, hi >>= 1) {
    if (lo & 1) {
      tree_[lo++] += w;
      ++touched;
    }
    if (hi & 1) {
      tree_[--hi] += w;
      ++touched;
    }
  }
  cnt_.node_touches += touched;
  cnt_.max_touch_per_slab = std::max(cnt_.max_touch_per_slab, touched);
}

void SlabSweep::advance_to(i64 y) {
  while (next_ < items_.size() && items_[next_].b <= y) {
    const Item& it = items_[next_++];
    add_range(it.lo, it.hi, it.w);
    ++cnt_.slab_inserts;
  }
}

CoeffQuad SlabSweep::query(size_t xi) {
  CoeffQuad q;
  for (size_t v = xi + size_; v >= 1; v >>= 1) {
    q += tree_[v];
    ++cnt_.query_nodes;
  }
  ++cnt_.queries;
  return q;
}

std::vector<CoeffQuad> batch_query(const SlabSet& slabs, const CandidateGrid& grid,
                                   const std::vector<std::pair<i64, i64>>& queries, SweepCounters* counters) {
  std::vector<size_t> xi(queries.size());
  for (size_t i = 0; i < queries.size(); ++i) {
    xi[i] = grid.index_x(queries[i].first);
    grid.index_y(queries[i].second);
  }
  std::vector<size_t> order(queries.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return queries[a].second < queries[b].second; });
  SlabSweep sweep(slabs, grid.X);
  std::vector<CoeffQuad> out(queries.size());
  for (size_t k : order) {
    sweep.advance_to(queries[k].second);
    out[k] = sweep.query(xi[k]);
  }
  if (counters) *counters = sweep.counters();
  return out;
}

}  // namespace overlap
