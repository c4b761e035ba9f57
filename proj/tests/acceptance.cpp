#include "overlap/extreme_point.hpp"
#include "overlap/genbench.hpp"
#include "overlap/hardness.hpp"
#include "overlap/kernel.hpp"
#include "overlap/solvers.hpp"
#include "overlap/sweep_query.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

using namespace overlap;

namespace {

// pinned thresholds
constexpr int kOracleInstances = 500;
constexpr double kOracleSeconds = 300;
constexpr int kRectPairs = 10000;
constexpr int kTauPerPair = 10;
constexpr size_t kMaxPieces = 9, kMaxSlabs = 18;
constexpr int kDiscInstances = 100, kDiscSamples = 1000;
constexpr int kSweepSets = 100;
constexpr size_t kSweepMaxSlabs = 1000, kSweepMaxQueries = 1000;
constexpr int kEpSets = 3, kEpPoints = 1000, kEpDirections = 10000;
constexpr double kFastSlopeMax = 1.75, kBaselineSlopeMin = 1.85, kSlopeGap = 0.15;
constexpr double kBenchSeconds = 900;
const double kHeavyConstant = std::sqrt(18.0) + 1.0;
constexpr i64 kMaxElement = 12;
constexpr int kRandomSumInstances = 200;
constexpr double kReductionSeconds = 600;
constexpr size_t kContainmentMaxQ = 32;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

bool report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("criterion %d %s: %s (%s)\n", id, ok ? "PASS" : "FAIL", name, detail.c_str());
  std::fflush(stdout);
  return ok;
}

template <class... T>
std::string fmt(const char* f, T... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Rational rnd_rational(std::mt19937_64& rng, i64 lo, i64 hi, i64 max_den) {
  std::uniform_int_distribution<i64> den(1, max_den);
  i64 d = den(rng);
  std::uniform_int_distribution<i64> num(lo * d, hi * d);
  return Rational(num(rng), d);
}

Rational quad_value(i128 A, i128 B, i128 C, i128 D, const Rational& x, const Rational& y) {
  return Rational(to_big(A)) + Rational(to_big(B)) * x + Rational(to_big(C)) * y + Rational(to_big(D)) * x * y;
}

bool criterion1() {
  auto t0 = Clock::now();
  int bad = 0;
  for (int i = 0; i < kOracleInstances; ++i) {
    std::uint64_t seed = 1000 + std::uint64_t(i);
    std::mt19937_64 rng(seed);
    int n = i % 2 ? 40 : 4 + 2 * std::uniform_int_distribution<int>(0, 18)(rng);
    int m = i % 2 ? 20 : 4 + 2 * std::uniform_int_distribution<int>(0, 8)(rng);
    i64 range = i % 4 == 0 ? 16 : 4096;
    OrthoPolygon P = gen_random_ortho(n, seed * 2, range), Q = gen_random_ortho(m, seed * 2 + 1, range);
    OverlapResult b = solve_bruteforce(P, Q), s = solve_baseline(P, Q), f = solve_fast(P, Q);
    bool ok = b.area == s.area && s.area == f.area && evaluate_at(P, Q, b.x, b.y) == b.area &&
              evaluate_at(P, Q, s.x, s.y) == s.area && evaluate_at(P, Q, f.x, f.y) == f.area;
    if (!ok) {
      ++bad;
      std::printf("  mismatch seed=%llu brute=%s baseline=%s fast=%s\n", (unsigned long long)seed,
                  to_string(b.area).c_str(), to_string(s.area).c_str(), to_string(f.area).c_str());
    }
  }
  double t = since(t0);
  return report(1, "oracle triple agreement", bad == 0 && t <= kOracleSeconds,
                fmt("%d instances, %d mismatches, %.1f s of %.0f s", kOracleInstances, bad, t, kOracleSeconds));
}

bool criterion2() {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<i64> c(-100, 100), s(1, 60);
  size_t max_p = 0, max_s = 0;
  int bad = 0;
  for (int k = 0; k < kRectPairs; ++k) {
    auto rr = [&] {
      i64 l = c(rng), b = c(rng);
      i64 w = k % 5 == 0 ? 3 : s(rng), h = k % 7 == 0 ? 3 : s(rng);
      return Rect{l, l + w, b, b + h};
    };
    Rect p = rr(), q = rr();
    auto ps = rect_pair_pieces(p, q);
    auto ss = rect_pair_slabs(p, q);
    max_p = std::max(max_p, ps.size());
    max_s = std::max(max_s, ss.size());
    for (int j = 0; j < kTauPerPair; ++j) {
      Rational x = rnd_rational(rng, p.l - q.r - 2, p.r - q.l + 2, 9);
      Rational y = rnd_rational(rng, p.b - q.t - 2, p.t - q.b + 2, 9);
      Rational pv = 0, sv = 0;
      for (const auto& pc : ps)
        if (x >= pc.l && x < pc.r && y >= pc.b && y < pc.t) pv += quad_value(pc.A, pc.B, pc.C, pc.D, x, y);
      for (const auto& sl : ss)
        if (x >= sl.l && x < sl.r && y >= sl.b) sv += quad_value(sl.A, sl.B, sl.C, sl.D, x, y);
      if (pv != sv) ++bad;
    }
  }
  return report(2, "piece and slab bounds", bad == 0 && max_p <= kMaxPieces && max_s <= kMaxSlabs,
                fmt("%d pairs x %d tau, max pieces %zu, max slabs %zu, %d mismatches", kRectPairs, kTauPerPair,
                    max_p, max_s, bad));
}

bool criterion3() {
  std::mt19937_64 rng(3);
  int bad = 0;
  for (int i = 0; i < kDiscInstances; ++i) {
    std::uint64_t seed = 3000 + std::uint64_t(i);
    i64 range = i % 2 ? 12 : 4096;
    OrthoPolygon P = gen_random_ortho(4 + 2 * (i % 15), seed, range), Q = gen_random_ortho(4 + 2 * (i % 7), seed + 1, range);
    OverlapResult best = solve_baseline(P, Q);
    Rational mx(to_big(best.area));
    OverlapEvaluator ev(P, Q);
    Rect bp = bounding_box(P), bq = bounding_box(Q);
    for (int k = 0; k < kDiscSamples; ++k) {
      Rational x = rnd_rational(rng, bp.l - bq.r - 1, bp.r - bq.l + 1, 97);
      Rational y = rnd_rational(rng, bp.b - bq.t - 1, bp.t - bq.b + 1, 97);
      if (ev.at(x, y) > mx) ++bad;
    }
  }
  return report(3, "discretization", bad == 0,
                fmt("%d instances x %d rational tau, %d exceed the grid maximum", kDiscInstances, kDiscSamples, bad));
}

bool criterion4() {
  std::mt19937_64 rng(4);
  int bad = 0;
  size_t total_q = 0;
  for (int rep = 0; rep < kSweepSets; ++rep) {
    std::uniform_int_distribution<size_t> sz(1, kSweepMaxSlabs), qz(1, kSweepMaxQueries), gz(2, 300);
    size_t ns = sz(rng), nq = qz(rng), nx = gz(rng), ny = gz(rng);
    std::uniform_int_distribution<i64> coord(-(i64(1) << 21), i64(1) << 21), w(-(i64(1) << 42), i64(1) << 42);
    std::set<i64> xs, ys;
    while (xs.size() < nx) xs.insert(coord(rng));
    while (ys.size() < ny) ys.insert(coord(rng));
    CandidateGrid g{{xs.begin(), xs.end()}, {ys.begin(), ys.end()}};
    SlabSet s;
    std::uniform_int_distribution<size_t> ix(0, nx - 1), iy(0, ny - 1);
    for (size_t k = 0; k < ns; ++k) {
      size_t a = ix(rng), b = ix(rng);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      s.slabs.push_back({g.X[a], g.X[b], g.Y[iy(rng)], w(rng), w(rng) >> 20, w(rng) >> 20, w(rng) >> 41});
    }
    std::vector<std::pair<i64, i64>> qs;
    for (size_t k = 0; k < nq; ++k) qs.push_back({g.X[ix(rng)], g.Y[iy(rng)]});
    auto res = batch_query(s, g, qs);
    for (size_t k = 0; k < nq; ++k) {
      CoeffQuad d;
      for (const auto& t : s.slabs)
        if (slab_contains(t, qs[k].first, qs[k].second)) d += CoeffQuad{t.A, t.B, t.C, t.D};
      if (!(d == res[k])) ++bad;
    }
    total_q += nq;
  }
  return report(4, "sweep-query equivalence", bad == 0,
                fmt("%d slab sets, %zu queries, %d mismatches", kSweepSets, total_q, bad));
}

int ep_check(const std::vector<LiftedPoint>& pts, std::mt19937_64& rng, int dirs, i64 drange, size_t threshold) {
  EPIndex idx = ep_build(pts, threshold);
  std::uniform_int_distribution<i64> d(-drange, drange);
  int bad = 0;
  for (int q = 0; q < dirs; ++q) {
    i128 d1 = d(rng), d2 = d(rng);
    EPResult got = ep_query(idx, d1, d2);
    if (got.value != linear_scan_max(pts, d1, d2).value || lifted_dot(got.point, d1, d2) != got.value) ++bad;
  }
  return bad;
}

bool criterion5() {
  std::mt19937_64 rng(5);
  int bad = 0, suites = 0;
  std::uniform_int_distribution<i64> c(-(i64(1) << 40), i64(1) << 40);
  for (int s = 0; s < kEpSets; ++s) {
    std::vector<LiftedPoint> pts;
    for (int i = 0; i < kEpPoints; ++i) pts.push_back({c(rng), c(rng), c(rng), i});
    bad += ep_check(pts, rng, kEpDirections, i64(1) << 40, kDefaultLinearThreshold);
  }
  std::uniform_int_distribution<i64> small(-30, 30);
  auto suite = [&](std::vector<LiftedPoint> pts) {
    ++suites;
    bad += ep_check(pts, rng, 2000, 50, 0);
  };
  {
    std::vector<LiftedPoint> pts(kEpPoints, LiftedPoint{4, -2, 9, 0});
    for (int i = 0; i < kEpPoints; ++i) pts[size_t(i)].tag = i;
    suite(pts);
  }
  {
    std::vector<LiftedPoint> pts;
    for (int i = 0; i < kEpPoints; ++i) {
      i64 t = small(rng);
      pts.push_back({3 * t, 1 - t, 2 * t + 7, i});
    }
    suite(pts);
  }
  {
    std::vector<LiftedPoint> pts;
    for (int i = 0; i < kEpPoints; ++i) {
      i64 a = small(rng), b = small(rng);
      pts.push_back({a, b, 5 * a - 3 * b + 1, i});
    }
    suite(pts);
  }
  {
    std::vector<LiftedPoint> pts;
    for (int i = 0; i < kEpPoints; ++i) pts.push_back({small(rng), 2, small(rng), i});
    suite(pts);
  }
  {
    std::vector<LiftedPoint> pts;
    for (int i = 0; i < kEpPoints / 2; ++i) pts.push_back({small(rng), small(rng), small(rng), i});
    for (int i = 0; i < kEpPoints / 2; ++i) pts.push_back(pts[size_t(i)]);
    suite(pts);
  }
  {
    std::vector<LiftedPoint> pts;
    for (int x = 0; x < 10; ++x)
      for (int y = 0; y < 10; ++y)
        for (int z = 0; z < 10; ++z) pts.push_back({x, y, z, i64(pts.size())});
    suite(pts);
  }
  return report(5, "extreme-point exactness", bad == 0,
                fmt("%d random sets of %d points x %d directions, %d degenerate suites, %d mismatches", kEpSets,
                    kEpPoints, kEpDirections, suites, bad));
}

BenchConfig comb_config() {
  BenchConfig cfg;
  cfg.family = "comb";
  cfg.sizes = {32, 64, 128, 256};
  cfg.algos = {"fast", "baseline"};
  cfg.trials = 1;
  cfg.budget_seconds = kBenchSeconds;
  cfg.on_record = [](const BenchRecord& r) {
    std::printf("  %s n=%zu m=%zu work=%llu wall=%.3f s\n", r.algo.c_str(), r.n, r.m,
                (unsigned long long)r.op("work"), double(r.wall_ns) / 1e9);
    std::fflush(stdout);
  };
  return cfg;
}

bool criterion6() {
  auto t0 = Clock::now();
  BenchResult res = run_bench(comb_config());
  double t = since(t0);
  double fast = NAN, base = NAN, fast_wall = NAN, base_wall = NAN;
  for (const auto& f : res.fits) {
    if (f.algo == "fast") fast = f.ops_slope, fast_wall = f.wall_slope;
    if (f.algo == "baseline") base = f.ops_slope, base_wall = f.wall_slope;
  }
  bool areas = true;
  for (size_t i = 0; i + 1 < res.records.size(); i += 2) areas = areas && res.records[i].area == res.records[i + 1].area;
  bool ok = !res.budget_exceeded && areas && fast <= kFastSlopeMax && base >= kBaselineSlopeMin &&
            fast < base - kSlopeGap && t <= kBenchSeconds;
  return report(6, "scaling separation", ok,
                fmt("ops slope fast %.3f (<= %.2f), baseline %.3f (>= %.2f), gap %.3f (> %.2f); wall slopes %.3f / "
                    "%.3f; %.1f s of %.0f s",
                    fast, kFastSlopeMax, base, kBaselineSlopeMin, base - fast, kSlopeGap, fast_wall, base_wall, t,
                    kBenchSeconds));
}

bool criterion7() {
  BenchConfig cfg = comb_config();
  cfg.algos = {"fast"};
  std::vector<BenchRecord> recs = run_bench(cfg).records;
  BenchConfig rnd = cfg;
  rnd.family = "random";
  rnd.sizes = {32, 64, 128, 256};
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    rnd.seed = seed;
    for (auto& r : run_bench(rnd).records) recs.push_back(r);
  }
  double worst_c = 0;
  int bad = 0;
  for (const auto& r : recs) {
    double nr = double(r.op("rects_p")), mr = double(r.op("rects_q"));
    double mb = double(r.op("max_block_slabs"));
    double c = double(r.op("heavy_rows")) / std::sqrt(nr * mr);
    worst_c = std::max(worst_c, c);
    if (!(mb * mb < 18 * nr * mr) || c > kHeavyConstant) ++bad;
  }
  return report(7, "block accounting", bad == 0,
                fmt("%zu runs, max |Y_heavy|/sqrt(nr*mr) = %.3f, c = %.3f, %d violations", recs.size(), worst_c,
                    kHeavyConstant, bad));
}

struct ReductionTally {
  int instances = 0, verdict_bad = 0, sampling_bad = 0, other_bad = 0, sat = 0;
};

void certify_into(const ReductionInstance& ri, ReductionTally& t, std::uint64_t seed) {
  CertifyOptions o;
  o.seed = seed;
  CertReport r = certify_reduction(ri, o);
  ++t.instances;
  if (r.sat) ++t.sat;
  if (r.sweep_verdict != r.sat) ++t.verdict_bad;
  if (!r.sat && r.samples_reaching > 0) ++t.sampling_bad;
  if (!r.pass()) ++t.other_bad;
  if (!r.pass()) {
    std::ostringstream o2;
    for (auto* v : {&ri.source.A, &ri.source.B, &ri.source.C, &ri.source.D, &ri.source.E}) {
      o2 << "{";
      for (i64 x : *v) o2 << x << ",";
      o2 << "}";
    }
    std::printf("  failing instance %s\n", o2.str().c_str());
  }
}

std::vector<i64> random_set(std::mt19937_64& rng, size_t n) {
  std::uniform_int_distribution<i64> d(1, kMaxElement);
  std::set<i64> s;
  while (s.size() < n) s.insert(d(rng));
  return {s.begin(), s.end()};
}

bool criterion8() {
  auto t0 = Clock::now();
  ReductionTally t;
  // n = m = 1: the verdict depends on a and the multiset {b, c, d, e}
  std::uint64_t seed = 1;
  for (i64 a = 1; a <= kMaxElement; ++a)
    for (i64 b = 1; b <= kMaxElement; ++b)
      for (i64 c = b; c <= kMaxElement; ++c)
        for (i64 d = c; d <= kMaxElement; ++d)
          for (i64 e = d; e <= kMaxElement; ++e)
            certify_into(gen_overlap_instance({{a}, {b}, {c}, {d}, {e}}), t, seed++);
  int exhaustive = t.instances;
  std::mt19937_64 rng(8);
  for (int k = 0; k < kRandomSumInstances; ++k) {
    size_t n = 1 + size_t(k % 3), m = 1 + size_t((k / 3) % 2);
    SumInstance s{random_set(rng, n), random_set(rng, n), random_set(rng, n), random_set(rng, m), random_set(rng, m)};
    if (k % 4 == 0 && !solve_32sum_brute(s)) {
      // plant a witness in a quarter of the random instances
      i64 a = s.B[0] + s.C[0] + s.D[0] + s.E[0];
      if (a <= kMaxElement) s.A.back() = a;
    }
    certify_into(gen_overlap_instance(s), t, seed++);
  }
  double secs = since(t0);
  bool ok = t.verdict_bad == 0 && t.sampling_bad == 0 && t.other_bad == 0 && secs <= kReductionSeconds;
  return report(8, "reduction certification", ok,
                fmt("%d exhaustive + %d random instances (%d sat), verdict mismatches %d, unsat sampling hits %d, "
                    "other check failures %d, %.1f s of %.0f s",
                    exhaustive, t.instances - exhaustive, t.sat, t.verdict_bad, t.sampling_bad, t.other_bad, secs,
                    kReductionSeconds));
}

bool criterion9() {
  ReductionTally t;
  size_t max_q = 0;
  std::uint64_t seed = 1;
  for (i64 a = 1; a <= kMaxElement; ++a)
    for (i64 b = 1; b <= kMaxElement; ++b)
      for (i64 c = b; c <= kMaxElement; ++c) {
        ReductionInstance ri = gen_containment_instance({{a}, {b}, {c}, {}, {}});
        max_q = std::max(max_q, ri.Q.size());
        certify_into(ri, t, seed++);
      }
  std::mt19937_64 rng(9);
  for (int k = 0; k < 150; ++k) {
    size_t n = 2 + size_t(k % 3);
    SumInstance s{random_set(rng, n), random_set(rng, n), random_set(rng, n), {}, {}};
    ReductionInstance ri = gen_containment_instance(s);
    max_q = std::max(max_q, ri.Q.size());
    certify_into(ri, t, seed++);
  }
  for (size_t n : {8, 16, 32, 64}) {
    std::vector<i64> v;
    for (size_t i = 1; i <= n; ++i) v.push_back(i64(i));
    max_q = std::max(max_q, gen_containment_instance({v, v, v, {}, {}}).Q.size());
  }
  bool ok = t.verdict_bad == 0 && t.other_bad == 0 && max_q <= kContainmentMaxQ;
  return report(9, "containment variant", ok,
                fmt("%d instances (%d contain), verdict mismatches %d, check failures %d, max |Q| = %zu (<= %zu)",
                    t.instances, t.sat, t.verdict_bad, t.other_bad, max_q, kContainmentMaxQ));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::vector<int> which;
  app.add_option("--criterion", which, "criterion numbers (default: all)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);
  if (which.empty()) which = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  bool (*const fns[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                           criterion6, criterion7, criterion8, criterion9};
  bool all = true;
  for (int c : which) {
    try {
      all = fns[c - 1]() && all;
    } catch (const std::exception& e) {
      report(c, "exception", false, e.what());
      all = false;
    }
  }
  return all ? 0 : 1;
}
