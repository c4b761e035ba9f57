#include "overlap/kernel.hpp"
#include "overlap/solvers.hpp"
#include "overlap/sweep_query.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <bit>
#include <set>

using namespace overlap;
using namespace overlap::testing;

namespace {

CoeffQuad direct(const SlabSet& s, i64 x, i64 y) {
  CoeffQuad q;
  for (const auto& t : s.slabs)
    if (slab_contains(t, x, y)) q += CoeffQuad{t.A, t.B, t.C, t.D};
  return q;
}

struct RandomSlabs {
  SlabSet set;
  CandidateGrid grid;
};

RandomSlabs random_slabs(std::mt19937_64& rng, size_t nslabs, size_t nx, size_t ny) {
  RandomSlabs r;
  std::uniform_int_distribution<i64> coord(-1000, 1000), w(-1000000, 1000000);
  std::set<i64> xs, ys;
  while (xs.size() < nx) xs.insert(coord(rng));
  while (ys.size() < ny) ys.insert(coord(rng));
  r.grid.X.assign(xs.begin(), xs.end());
  r.grid.Y.assign(ys.begin(), ys.end());
  std::uniform_int_distribution<size_t> ix(0, nx - 1), iy(0, ny - 1);
  for (size_t k = 0; k < nslabs; ++k) {
    size_t a = ix(rng), b = ix(rng);
    if (a == b) b = a + 1 < nx ? a + 1 : a - 1;
    if (a > b) std::swap(a, b);
    r.set.slabs.push_back({r.grid.X[a], r.grid.X[b], r.grid.Y[iy(rng)], w(rng), w(rng), w(rng), w(rng)});
  }
  return r;
}

}  // namespace

TEST_SUITE("sweepq") {
  TEST_CASE("single slab stabbing and half-open right edge") {
    SlabSet s;
    s.slabs.push_back({0, 2, 0, 1, 2, 3, 4});
    CandidateGrid g{{0, 1, 2}, {0}};
    auto r = batch_query(s, g, {{1, 0}, {2, 0}, {0, 0}});
    CHECK(r[0] == CoeffQuad{1, 2, 3, 4});
    CHECK(r[1] == CoeffQuad{});
    CHECK(r[2] == CoeffQuad{1, 2, 3, 4});
    CHECK_THROWS_AS(batch_query(s, g, {{1, -1}}), OverlapError);
    CHECK_THROWS_AS(batch_query(s, g, {{3, 0}}), OverlapError);
  }

  TEST_CASE("random slab sets match direct summation; output order follows input") {
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 30; ++rep) {
      RandomSlabs r = random_slabs(rng, 200, 60, 40);
      std::vector<std::pair<i64, i64>> qs;
      std::uniform_int_distribution<size_t> ix(0, r.grid.X.size() - 1), iy(0, r.grid.Y.size() - 1);
      for (int k = 0; k < 500; ++k) qs.push_back({r.grid.X[ix(rng)], r.grid.Y[iy(rng)]});
      SweepCounters c;
      auto res = batch_query(r.set, r.grid, qs, &c);
      REQUIRE(res.size() == qs.size());
      for (size_t k = 0; k < qs.size(); ++k) CHECK(res[k] == direct(r.set, qs[k].first, qs[k].second));
      size_t lg = std::bit_width(r.grid.X.size() - 1);
      CHECK(c.max_touch_per_slab <= 2 * lg + 2);
      CHECK(c.queries == qs.size());
    }
  }

  TEST_CASE("touch bound holds on real instances") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      OrthoPolygon P = gen_random_ortho(40, seed, 4096), Q = gen_random_ortho(20, seed + 9, 4096);
      SlabSet s = build_translation_slabs(P, Q);
      CandidateGrid g = candidate_grid(P, Q);
      SlabSweep sweep(s, g.X);
      sweep.advance_to(g.Y.back());
      size_t lg = std::bit_width(g.X.size() - 1);
      CHECK(sweep.counters().max_touch_per_slab <= 2 * lg + 2);
      CHECK(sweep.counters().slab_inserts == s.slabs.size());
    }
  }

  TEST_CASE("quads from real instances reproduce evaluate_at") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      OrthoPolygon P = gen_random_ortho(12, seed, 20), Q = gen_random_ortho(8, seed + 3, 20);
      SlabSet s = build_translation_slabs(P, Q);
      CandidateGrid g = candidate_grid(P, Q);
      std::vector<std::pair<i64, i64>> qs;
      for (i64 x : g.X)
        for (i64 y : g.Y) qs.push_back({x, y});
      auto res = batch_query(s, g, qs);
      for (size_t k = 0; k < qs.size(); ++k)
        CHECK(res[k].eval(qs[k].first, qs[k].second) == evaluate_at(P, Q, qs[k].first, qs[k].second));
    }
  }
}
