#pragma once

#include "overlap/number.hpp"

#include <cstdint>
#include <vector>

namespace overlap::detail {

struct P3 {
  i128 x, y, z;
  friend bool operator==(const P3&, const P3&) = default;
  friend auto operator<=>(const P3&, const P3&) = default;
};

struct HullGraph {
  int dim = 0;                        // affine dimension of the input
  std::vector<int> verts;             // input indices of hull vertices
  std::vector<std::vector<int>> adj;  // parallel to verts, neighbours as input indices
};

// True when exact orientation tests on these points fit 256-bit arithmetic.
bool orientation_safe(const std::vector<P3>& pts, const std::vector<int>& ids);

// Vertex/edge graph of conv(pts[ids]); ids must reference distinct points.
HullGraph hull_graph(const std::vector<P3>& pts, const std::vector<int>& ids, std::uint64_t seed,
                     std::uint64_t& ops);

}  // namespace overlap::detail
