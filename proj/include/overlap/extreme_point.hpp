#pragma once

#include "overlap/number.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace overlap {

struct LiftedPoint {
  i128 u = 0, v = 0, w = 0;
  i64 tag = 0;
  friend bool operator==(const LiftedPoint&, const LiftedPoint&) = default;
};

inline i128 lifted_dot(const LiftedPoint& p, i128 d1, i128 d2) { return d1 * p.u + d2 * p.v + p.w; }

struct EPResult {
  LiftedPoint point;
  i128 value;
};

inline constexpr size_t kDefaultLinearThreshold = 8;

// Extreme-point index for directions (d1, d2, 1).  Hull vertices are
// organised in a hierarchy of successively coarser hulls; a query starts at
// the coarsest level and walks the hull graph of each finer level.
class EPIndex {
 public:
  EPIndex() = default;
  size_t size() const { return pts_.size(); }
  size_t levels() const { return levels_.size(); }
  bool linear() const { return linear_; }
  std::uint64_t build_ops() const { return build_ops_; }
  EPResult query(i128 d1, i128 d2, std::uint64_t* steps = nullptr) const;

 private:
  friend EPIndex ep_build(const std::vector<LiftedPoint>&, size_t);
  struct Level {
    std::vector<int> verts;
    std::vector<std::vector<int>> adj;  // parallel to verts; point indices
    std::vector<int> local;             // point index -> slot in verts, or -1
  };
  bool better(int a, int b, i128 d1, i128 d2) const;

  std::vector<LiftedPoint> pts_;  // deduplicated by coordinates, smallest tag kept
  std::vector<Level> levels_;     // levels_[0] finest
  bool linear_ = false;
  std::uint64_t build_ops_ = 0;
};

EPIndex ep_build(const std::vector<LiftedPoint>& points, size_t linear_threshold = kDefaultLinearThreshold);
EPResult ep_query(const EPIndex& index, i128 d1, i128 d2);

// argmax of d1*u + d2*v + w, smallest tag among maximizers
EPResult linear_scan_max(const std::vector<LiftedPoint>& points, i128 d1, i128 d2);

}  // namespace overlap
