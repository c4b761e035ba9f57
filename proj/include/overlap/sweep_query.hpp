#pragma once

#include "overlap/kernel.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace overlap {

struct CoeffQuad {
  i128 A = 0, B = 0, C = 0, D = 0;
  i128 eval(i128 x, i128 y) const { return eval_bilinear(A, B, C, D, x, y); }
  CoeffQuad& operator+=(const CoeffQuad& o) {
    A += o.A;
    B += o.B;
    C += o.C;
    D += o.D;
    return *this;
  }
  friend bool operator==(const CoeffQuad&, const CoeffQuad&) = default;
};

struct SweepCounters {
  std::uint64_t slab_inserts = 0;
  std::uint64_t node_touches = 0;   // range-update nodes
  std::uint64_t max_touch_per_slab = 0;
  std::uint64_t queries = 0;
  std::uint64_t query_nodes = 0;
};

// Perfect binary tree over X; slabs applied in order of b as the sweep line rises.
class SlabSweep {
 public:
  SlabSweep(const SlabSet& slabs, const std::vector<i64>& X);
  void advance_to(i64 y);  // apply every slab with b <= y; y must not decrease
  CoeffQuad query(size_t xi);
  const SweepCounters& counters() const { return cnt_; }
  size_t leaf_count() const { return size_; }

 private:
  void add_range(size_t lo, size_t hi, const CoeffQuad& w);

  struct Item {
    i64 b;
    size_t lo, hi;
    CoeffQuad w;
  };
  std::vector<Item> items_;
  size_t next_ = 0;
  size_t size_ = 1;
  std::vector<CoeffQuad> tree_;
  SweepCounters cnt_;
};

std::vector<CoeffQuad> batch_query(const SlabSet& slabs, const CandidateGrid& grid,
                                   const std::vector<std::pair<i64, i64>>& queries,
                                   SweepCounters* counters = nullptr);

}  // namespace overlap
