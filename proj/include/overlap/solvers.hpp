#pragma once

#include "overlap/extreme_point.hpp"
#include "overlap/kernel.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace overlap {

struct SolveStats {
  std::uint64_t rects_p = 0, rects_q = 0, slabs = 0, grid_x = 0, grid_y = 0;
  std::uint64_t candidates = 0, pair_evals = 0;
  std::uint64_t slab_inserts = 0, tree_node_touches = 0, max_touch_per_slab = 0, queries = 0, query_nodes = 0;
  std::uint64_t blocks = 0, heavy_rows = 0, max_block_slabs = 0, block_threshold_sq = 0;
  std::uint64_t cells = 0, cell_x_total = 0, lift_steps = 0;
  std::uint64_t hull_builds = 0, hull_points = 0, hull_ops = 0, ep_queries = 0, ep_steps = 0;
  std::uint64_t wall_ns = 0;

  std::uint64_t work() const {
    return pair_evals + candidates + tree_node_touches + query_nodes + lift_steps + hull_ops + ep_steps;
  }
  std::vector<std::pair<std::string, std::uint64_t>> named() const;
};

struct OverlapResult {
  i64 x = 0, y = 0;
  i128 area = 0;
  std::string algo;
  SolveStats stats;
};

struct SolveOptions {
  std::uint64_t brute_limit = 1000000;
  size_t ep_linear_threshold = kDefaultLinearThreshold;
  bool shadow_checks = false;  // compare every lifted set and extreme-point query against direct oracles
};

class OverlapEvaluator {
 public:
  OverlapEvaluator(const OrthoPolygon& P, const OrthoPolygon& Q);
  OverlapEvaluator(std::vector<Rect> rp, std::vector<Rect> rq) : rp_(std::move(rp)), rq_(std::move(rq)) {}
  i128 at(i64 x, i64 y, std::uint64_t* pairs = nullptr) const;
  Rational at(const Rational& x, const Rational& y) const;
  const std::vector<Rect>& rects_p() const { return rp_; }
  const std::vector<Rect>& rects_q() const { return rq_; }

 private:
  std::vector<Rect> rp_, rq_;
};

Rational evaluate_at(const OrthoPolygon& P, const OrthoPolygon& Q, const Rational& x, const Rational& y);
i128 evaluate_at(const OrthoPolygon& P, const OrthoPolygon& Q, i64 x, i64 y);

OverlapResult solve_bruteforce(const OrthoPolygon& P, const OrthoPolygon& Q, const SolveOptions& opt = {});
OverlapResult solve_baseline(const OrthoPolygon& P, const OrthoPolygon& Q, const SolveOptions& opt = {});
OverlapResult solve_fast(const OrthoPolygon& P, const OrthoPolygon& Q, const SolveOptions& opt = {});
OverlapResult solve(const std::string& algo, const OrthoPolygon& P, const OrthoPolygon& Q,
                    const SolveOptions& opt = {});

}  // namespace overlap
