#include "overlap/solvers.hpp"

#include "overlap/sweep_query.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace overlap {

std::vector<std::pair<std::string, std::uint64_t>> SolveStats::named() const {
  return {{"rects_p", rects_p},
          {"rects_q", rects_q},
          {"slabs", slabs},
          {"grid_x", grid_x},
          {"grid_y", grid_y},
          {"candidates", candidates},
          {"pair_evals", pair_evals},
          {"slab_inserts", slab_inserts},
          {"tree_node_touches", tree_node_touches},
          {"max_touch_per_slab", max_touch_per_slab},
          {"queries", queries},
          {"query_nodes", query_nodes},
          {"blocks", blocks},
          {"heavy_rows", heavy_rows},
          {"max_block_slabs", max_block_slabs},
          {"block_threshold_sq", block_threshold_sq},
          {"cells", cells},
          {"cell_x_total", cell_x_total},
          {"lift_steps", lift_steps},
          {"hull_builds", hull_builds},
          {"hull_points", hull_points},
          {"hull_ops", hull_ops},
          {"ep_queries", ep_queries},
          {"ep_steps", ep_steps},
          {"work", work()}};
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t since(Clock::time_point t0) {
  return std::uint64_t(std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count());
}

void fill_common(SolveStats& s, size_t rp, size_t rq, const CandidateGrid& g) {
  s.rects_p = rp;
  s.rects_q = rq;
  s.grid_x = g.X.size();
  s.grid_y = g.Y.size();
}

void take_sweep(SolveStats& s, const SweepCounters& c) {
  s.slab_inserts += c.slab_inserts;
  s.tree_node_touches += c.node_touches;
  s.max_touch_per_slab = std::max(s.max_touch_per_slab, c.max_touch_per_slab);
  s.queries += c.queries;
  s.query_nodes += c.query_nodes;
}

}  // namespace

OverlapEvaluator::OverlapEvaluator(const OrthoPolygon& P, const OrthoPolygon& Q)
    : rp_(decompose_rectangles(P)), rq_(decompose_rectangles(Q)) {}

i128 OverlapEvaluator::at(i64 x, i64 y, std::uint64_t* pairs) const {
  i128 s = 0;
  for (const Rect& q : rq_) {
    i64 ql = q.l + x, qr = q.r + x, qb = q.b + y, qt = q.t + y;
    for (const Rect& p : rp_) {
      i64 w = std::min(p.r, qr) - std::max(p.l, ql);
      if (w <= 0) continue;
      i64 h = std::min(p.t, qt) - std::max(p.b, qb);
      if (h <= 0) continue;
      s += i128(w) * h;
    }
  }
  if (pairs) *pairs += rp_.size() * rq_.size();
  return s;
}

Rational OverlapEvaluator::at(const Rational& x, const Rational& y) const {
  BigInt L = boost::multiprecision::lcm(denominator(x), denominator(y));
  BigInt xn = numerator(x) * (L / denominator(x));
  BigInt yn = numerator(y) * (L / denominator(y));
  static const BigInt lim = BigInt(1) << 40;
  if (L <= BigInt(1) << 20 && abs(xn) < lim && abs(yn) < lim) {
    i128 l = to_i128(L), xs = to_i128(xn), ys = to_i128(yn);
    i128 s = 0;
    for (const Rect& q : rq_) {
      i128 ql = q.l * l + xs, qr = q.r * l + xs, qb = q.b * l + ys, qt = q.t * l + ys;
      for (const Rect& p : rp_) {
        i128 w = std::min<i128>(p.r * l, qr) - std::max<i128>(p.l * l, ql);
        if (w <= 0) continue;
        i128 h = std::min<i128>(p.t * l, qt) - std::max<i128>(p.b * l, qb);
        if (h <= 0) continue;
        s += w * h;
      }
    }
    return Rational(to_big(s), L * L);
  }
  Rational s = 0;
  for (const Rect& q : rq_)
    for (const Rect& p : rp_) {
      Rational w = std::min<Rational>(p.r, q.r + x) - std::max<Rational>(p.l, q.l + x);
      if (w <= 0) continue;
      Rational h = std::min<Rational>(p.t, q.t + y) - std::max<Rational>(p.b, q.b + y);
      if (h <= 0) continue;
      s += w * h;
    }
  return s;
}

Rational evaluate_at(const OrthoPolygon& P, const OrthoPolygon& Q, const Rational& x, const Rational& y) {
  return OverlapEvaluator(P, Q).at(x, y);
}

i128 evaluate_at(const OrthoPolygon& P, const OrthoPolygon& Q, i64 x, i64 y) {
  return OverlapEvaluator(P, Q).at(x, y);
}

OverlapResult solve_bruteforce(const OrthoPolygon& P, const OrthoPolygon& Q, const SolveOptions& opt) {
  auto t0 = Clock::now();
  CandidateGrid g = candidate_grid(P, Q);
  if (std::uint64_t(g.X.size()) * g.Y.size() > opt.brute_limit)
    throw OverlapError(ErrorCode::InstanceTooLarge, std::to_string(g.X.size()) + "x" +
                                                        std::to_string(g.Y.size()) +
                                                        " candidates exceed the brute-force limit");
  OverlapEvaluator ev(P, Q);
  OverlapResult res;
  res.algo = "brute";
  fill_common(res.stats, ev.rects_p().size(), ev.rects_q().size(), g);
  res.area = -1;
  for (i64 x : g.X)
    for (i64 y : g.Y) {
      i128 a = ev.at(x, y, &res.stats.pair_evals);
      ++res.stats.candidates;
      if (a > res.area) {
        res.area = a;
        res.x = x;
        res.y = y;
      }
    }
  res.stats.wall_ns = since(t0);
  return res;
}

OverlapResult solve_baseline(const OrthoPolygon& P, const OrthoPolygon& Q, const SolveOptions&) {
  auto t0 = Clock::now();
  std::vector<Rect> rp = decompose_rectangles(P), rq = decompose_rectangles(Q);
  CandidateGrid g = candidate_grid(P, Q);
  SlabSet slabs = build_translation_slabs(rp, rq);
  OverlapResult res;
  res.algo = "baseline";
  fill_common(res.stats, rp.size(), rq.size(), g);
  res.stats.slabs = slabs.slabs.size();
  res.area = -1;
  SlabSweep sweep(slabs, g.X);
  for (i64 y : g.Y) {
    sweep.advance_to(y);
    for (size_t xi = 0; xi < g.X.size(); ++xi) {
      i64 x = g.X[xi];
      i128 a = sweep.query(xi).eval(x, y);
      ++res.stats.candidates;
      if (a > res.area || (a == res.area && x < res.x)) {
        res.area = a;
        res.x = x;
        res.y = y;
      }
    }
  }
  take_sweep(res.stats, sweep.counters());
  res.stats.wall_ns = since(t0);
  return res;
}

OverlapResult solve_fast(const OrthoPolygon& P, const OrthoPolygon& Q, const SolveOptions& opt) {
  auto t0 = Clock::now();
  std::vector<Rect> rp = decompose_rectangles(P), rq = decompose_rectangles(Q);
  CandidateGrid g = candidate_grid(P, Q);
  const std::vector<i64>& X = g.X;
  const std::vector<i64>& Y = g.Y;
  SlabSet slabs = build_translation_slabs(rp, rq);
  OverlapResult res;
  res.algo = "fast";
  SolveStats& st = res.stats;
  fill_common(st, rp.size(), rq.size(), g);
  st.slabs = slabs.slabs.size();

  // slabs bucketed by the y-index of b, with x-ranges as indices into X
  struct S {
    size_t yi, lo, hi;
    const TranslationSlab* s;
  };
  std::vector<S> by_y;
  by_y.reserve(slabs.slabs.size());
  for (const TranslationSlab& s : slabs.slabs) {
    size_t lo = size_t(std::lower_bound(X.begin(), X.end(), s.l) - X.begin());
    size_t hi = size_t(std::lower_bound(X.begin(), X.end(), s.r) - X.begin());
    by_y.push_back({g.index_y(s.b), lo, hi, &s});
  }
  std::stable_sort(by_y.begin(), by_y.end(), [](const S& a, const S& b) { return a.yi < b.yi; });
  std::vector<size_t> off(Y.size() + 1, 0);
  for (const S& s : by_y) ++off[s.yi + 1];
  for (size_t i = 0; i < Y.size(); ++i) off[i + 1] += off[i];

  // minimal contiguous runs reaching the threshold; the last y of each run is peeled off
  const std::uint64_t thr_sq = 18ull * rp.size() * rq.size();
  st.block_threshold_sq = thr_sq;
  struct Block {
    size_t s, e;  // Y[s..e) remains, Y[e] is heavy
  };
  std::vector<Block> blocks;
  std::vector<char> heavy(Y.size(), 0), first(Y.size(), 0);
  std::vector<size_t> block_at(Y.size(), 0);
  {
    std::uint64_t cnt = 0;
    size_t s = 0;
    for (size_t yi = 0; yi < Y.size(); ++yi) {
      cnt += off[yi + 1] - off[yi];
      if (cnt * cnt >= thr_sq || yi + 1 == Y.size()) {
        blocks.push_back({s, yi});
        heavy[yi] = 1;
        if (s < yi) {
          first[s] = 1;
          block_at[s] = blocks.size() - 1;
        }
        st.max_block_slabs = std::max<std::uint64_t>(st.max_block_slabs, off[yi] - off[s]);
        s = yi + 1;
        cnt = 0;
      }
    }
  }
  st.blocks = blocks.size();
  st.heavy_rows = blocks.size();

  res.area = -1;
  auto consider = [&](i128 a, i64 x, i64 y) {
    if (a > res.area) {
      res.area = a;
      res.x = x;
      res.y = y;
    }
  };

  SlabSweep sweep(slabs, X);
  std::vector<CoeffQuad> row(X.size());
  std::vector<i128> SA, SB, SC, SD;
  std::vector<LiftedPoint> V;
  std::vector<size_t> cuts;
  struct Ev {
    size_t cell;
    int sign;
    const S* s;
  };
  std::vector<Ev> events;

  for (size_t yi = 0; yi < Y.size(); ++yi) {
    if (!heavy[yi] && !first[yi]) continue;
    i64 y = Y[yi];
    sweep.advance_to(y);
    for (size_t xi = 0; xi < X.size(); ++xi) row[xi] = sweep.query(xi);
    if (heavy[yi]) {
      for (size_t xi = 0; xi < X.size(); ++xi) {
        consider(row[xi].eval(X[xi], y), X[xi], y);
        ++st.candidates;
      }
      continue;
    }
    const Block& B = blocks[block_at[yi]];
    const size_t s = B.s, k = B.e - B.s;
    const i64 y1 = Y[s];

    cuts.assign({0, X.size()});
    for (size_t i = off[s]; i < off[B.e]; ++i) {
      cuts.push_back(by_y[i].lo);
      cuts.push_back(by_y[i].hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    const size_t ncell = cuts.size() - 1;

    events.clear();
    for (size_t i = off[s + 1]; i < off[B.e]; ++i) {
      const S& sl = by_y[i];
      if (sl.lo >= sl.hi) continue;
      size_t a = size_t(std::lower_bound(cuts.begin(), cuts.end(), sl.lo) - cuts.begin());
      size_t b = size_t(std::lower_bound(cuts.begin(), cuts.end(), sl.hi) - cuts.begin());
      events.push_back({a, +1, &sl});
      events.push_back({b, -1, &sl});
    }
    std::sort(events.begin(), events.end(), [](const Ev& a, const Ev& b) { return a.cell < b.cell; });
    SA.assign(k, 0);
    SB.assign(k, 0);
    SC.assign(k, 0);
    SD.assign(k, 0);
    size_t ev = 0;
    V.resize(k);
    for (size_t c = 0; c < ncell; ++c) {
      for (; ev < events.size() && events[ev].cell == c; ++ev) {
        const Ev& e = events[ev];
        size_t j = e.s->yi - s;
        SA[j] += e.sign * e.s->s->A;
        SB[j] += e.sign * e.s->s->B;
        SC[j] += e.sign * e.s->s->C;
        SD[j] += e.sign * e.s->s->D;
        ++st.lift_steps;
      }
      const size_t x0 = cuts[c], x1 = cuts[c + 1];
      if (x0 == x1) continue;
      ++st.cells;
      st.cell_x_total += x1 - x0;
      i128 RA = 0, RB = 0, RC = 0, RD = 0;
      for (size_t j = 0; j < k; ++j) {
        RA += SA[j];
        RB += SB[j];
        RC += SC[j];
        RD += SD[j];
        i128 yj = Y[s + j];
        V[j] = LiftedPoint{yj - y1, RB + RD * yj, RA + RC * yj, i64(j)};
      }
      st.lift_steps += k;
      if (opt.shadow_checks) {
        for (size_t j = 0; j < k; ++j) {
          i128 yj = Y[s + j], v = 0, w = 0;
          for (size_t i = off[s + 1]; i < off[B.e]; ++i) {
            const S& sl = by_y[i];
            if (sl.yi > s + j || sl.lo > x0 || sl.hi < x1) continue;
            v += sl.s->B + sl.s->D * yj;
            w += sl.s->A + sl.s->C * yj;
          }
          if (V[j].v != v || V[j].w != w || V[j].u != yj - y1)
            throw std::logic_error("lifted point mismatch against direct summation");
        }
      }
      EPIndex ep = ep_build(V, opt.ep_linear_threshold);
      ++st.hull_builds;
      st.hull_points += k;
      st.hull_ops += ep.build_ops();
      for (size_t xi = x0; xi < x1; ++xi) {
        const CoeffQuad& q = row[xi];
        const i128 x = X[xi];
        EPResult r = ep.query(q.C + q.D * x, x, &st.ep_steps);
        ++st.ep_queries;
        if (opt.shadow_checks) {
          EPResult o = linear_scan_max(V, q.C + q.D * x, x);
          if (o.value != r.value) throw std::logic_error("extreme-point query disagrees with linear scan");
        }
        i128 a = q.A + q.B * x + q.C * y1 + q.D * x * y1 + r.value;
        ++st.candidates;
        consider(a, i64(x), Y[s + size_t(r.point.tag)]);
      }
    }
  }
  take_sweep(st, sweep.counters());
  if (opt.shadow_checks) {
    OverlapEvaluator ev(std::move(rp), std::move(rq));
    if (ev.at(res.x, res.y) != res.area) throw std::logic_error("returned translation does not attain area");
  }
  st.wall_ns = since(t0);
  return res;
}

OverlapResult solve(const std::string& algo, const OrthoPolygon& P, const OrthoPolygon& Q, const SolveOptions& opt) {
  if (algo == "fast") return solve_fast(P, Q, opt);
  if (algo == "baseline") return solve_baseline(P, Q, opt);
  if (algo == "brute") return solve_bruteforce(P, Q, opt);
  throw std::invalid_argument("unknown algorithm: " + algo);
}

}  // namespace overlap
