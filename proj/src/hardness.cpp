#include "overlap/hardness.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace overlap {

SumInstance normalize(SumInstance s) {
  for (auto* v : {&s.A, &s.B, &s.C, &s.D, &s.E}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
    for (i64 x : *v)
      if (x < 1) throw std::invalid_argument("set elements must be positive");
  }
  return s;
}

std::optional<Witness> solve_32sum_brute(const SumInstance& s, std::uint64_t limit) {
  std::vector<i64> zero{0};
  const std::vector<i64>& D = s.D.empty() ? zero : s.D;
  const std::vector<i64>& E = s.E.empty() ? zero : s.E;
  std::uint64_t work = std::uint64_t(s.A.size()) * s.B.size() * s.C.size() * D.size() * E.size();
  if (work > limit) throw OverlapError(ErrorCode::InstanceTooLarge, "sum instance exceeds brute-force limit");
  for (size_t ia = 0; ia < s.A.size(); ++ia)
    for (size_t ib = 0; ib < s.B.size(); ++ib)
      for (size_t ic = 0; ic < s.C.size(); ++ic)
        for (size_t id = 0; id < D.size(); ++id)
          for (size_t ie = 0; ie < E.size(); ++ie)
            if (s.A[ia] == s.B[ib] + s.C[ic] + D[id] + E[ie])
              return Witness{s.A[ia], s.B[ib], s.C[ic], D[id], E[ie], ia, ib, ic, id, ie};
  return std::nullopt;
}

namespace {

using R = Rational;

void push(std::vector<RPoint>& v, const R& x, const R& y) { v.push_back({x, y}); }

i64 total(const SumInstance& s) {
  i64 t = 0;
  for (const auto* v : {&s.A, &s.B, &s.C, &s.D, &s.E})
    for (i64 x : *v) t += x;
  return t;
}

ReductionParams make_params(const SumInstance& s) {
  ReductionParams p;
  p.n = std::max({s.A.size(), s.B.size(), s.C.size()});
  p.m = std::max(s.D.size(), s.E.size());
  p.M = 100 * total(s);
  i64 n2 = 100 * i64(p.n) * i64(p.n);
  p.eps = R(1, n2);
  p.diag_width = R(10 * i64(p.n) + 2) * p.eps;
  // total connector length stays below 210M + 100
  BigInt K = BigInt(10) * n2 * (BigInt(210) * p.M + 100) + 1;
  p.connector_width = R(BigInt(1), BigInt(n2) * K);
  return p;
}

// origin square with x-, y- and diagonal prongs; `anchor` adds the far anchor and its connector
GeneralPolygon build_p(const SumInstance& s, const ReductionParams& pr, bool anchor) {
  const R M(pr.M), eps = pr.eps, w = pr.connector_width, wd = pr.diag_width;
  std::vector<RPoint> v;
  push(v, 0, 0);
  for (size_t i = 0; i < s.B.size(); ++i) {
    R xl = s.B[i] + R(3 * i64(i) + 1) * eps, xr = s.B[i] + R(3 * i64(i) + 2) * eps;
    push(v, xl, 0);
    push(v, xl, -2 * M);
    push(v, xr, -2 * M);
    push(v, xr, 0);
  }
  push(v, M, 0);
  for (size_t j = 0; j < s.C.size(); ++j) {
    R yl = s.C[j] + R(3 * i64(j) + 1) * eps, yr = s.C[j] + R(3 * i64(j) + 2) * eps;
    push(v, M, yl);
    push(v, 3 * M, yl);
    push(v, 3 * M, yr);
    push(v, M, yr);
  }
  push(v, M, M);
  if (anchor) {
    R xc = M / 2;
    push(v, xc + w, M);
    push(v, xc + w, 100 * M);
    push(v, M, 100 * M);
    push(v, M, 101 * M + 1);
    push(v, 0, 101 * M + 1);
    push(v, 0, 100 * M);
    push(v, xc, 100 * M);
    push(v, xc, M);
  }
  push(v, 0, M);
  for (size_t h = s.A.size(); h-- > 0;) {
    R a = s.A[h];
    push(v, 0, a + wd);
    push(v, -2 * M, a + wd + 2 * M);
    push(v, -2 * M, a + 2 * M);
    push(v, 0, a);
  }
  return make_general_polygon(std::move(v));
}

GeneralPolygon build_q_overlap(const SumInstance& s, const ReductionParams& pr) {
  const R M(pr.M), eps = pr.eps, w = pr.connector_width;
  const R sx(1, 2);
  const R dmax = s.D.back(), emax = s.E.back(), emin = s.E.front();
  std::vector<RPoint> v;
  push(v, -dmax, -2 * M);
  push(v, sx + w, -2 * M);
  push(v, sx + w, -emax);
  push(v, 2 * M, -emax);
  push(v, 2 * M, -emin + eps);
  for (size_t l = 0; l < s.E.size(); ++l) {
    R e = s.E[l];
    if (l > 0) push(v, 2 * M - w, -e + eps);
    push(v, 2 * M - eps, -e + eps);
    if (l + 1 < s.E.size()) {
      push(v, 2 * M - eps, -e);
      push(v, 2 * M - w, -e);
    } else {
      push(v, 2 * M - eps, -e + w);
    }
  }
  push(v, sx + w, -emax + w);
  push(v, sx + w, 100 * M);
  push(v, 1, 100 * M);
  push(v, 1, 100 * M + 1);
  push(v, 0, 100 * M + 1);
  push(v, 0, 100 * M);
  push(v, sx, 100 * M);
  push(v, sx, 2 * M + w);
  push(v, -2 * M + eps, 2 * M + w);
  push(v, -2 * M + eps, 2 * M + eps);
  push(v, -2 * M, 2 * M + eps);
  push(v, -2 * M, 2 * M);
  push(v, sx, 2 * M);
  push(v, sx, -2 * M + w);
  for (size_t k = 0; k < s.D.size(); ++k) {
    R d = s.D[k];
    push(v, -d + eps, -2 * M + w);
    push(v, -d + eps, -2 * M + eps);
    push(v, -d, -2 * M + eps);
    if (k + 1 < s.D.size()) push(v, -d, -2 * M + w);
  }
  return make_general_polygon(std::move(v));
}

GeneralPolygon build_q_containment(const ReductionParams& pr) {
  const R M(pr.M), eps = pr.eps, w = pr.connector_width;
  std::vector<RPoint> v;
  push(v, 0, 0);
  push(v, 0, -2 * M);
  push(v, eps, -2 * M);
  push(v, eps, -2 * M + eps);
  push(v, w, -2 * M + eps);
  push(v, w, 0);
  push(v, 2 * M, 0);
  push(v, 2 * M, eps);
  push(v, 2 * M - eps, eps);
  push(v, 2 * M - eps, w);
  push(v, 1, w);
  push(v, 1, 1);
  push(v, 0, 1);
  push(v, 0, w);
  push(v, w - 2 * M, 2 * M);
  push(v, -2 * M + eps, 2 * M);
  push(v, -2 * M + eps, 2 * M + eps);
  push(v, -2 * M, 2 * M + eps);
  push(v, -2 * M, 2 * M);
  return make_general_polygon(std::move(v));
}

GeneralPolygon square(const R& x, const R& y, const R& side) {
  return make_general_polygon({{x, y}, {x + side, y}, {x + side, y + side}, {x, y + side}});
}

void attach_gadgets(ReductionInstance& ri) {
  const R M(ri.params.M);
  for (i64 a : ri.source.A) {
    R lo(a), hi = lo + ri.params.diag_width;
    ri.diagonal_prongs.push_back(make_general_polygon({{-2 * M, lo + 2 * M}, {0, lo}, {0, hi}, {-2 * M, hi + 2 * M}}));
  }
  ri.verifier = square(-2 * M, 2 * M, ri.params.eps);
}

R gadget_area_p(const SumInstance& s, const ReductionParams& pr, bool anchor) {
  const R M(pr.M), eps = pr.eps;
  R g = M * M;
  g += R(i64(s.B.size())) * eps * 2 * M;
  g += R(i64(s.C.size())) * eps * 2 * M;
  g += R(i64(s.A.size())) * pr.diag_width * 2 * M;
  if (anchor) g += M * (M + 1);
  return g;
}

void check_budget(const ReductionInstance& ri) {
  if (!(ri.connector_area >= 0) || !(ri.connector_area < ri.params.eps * ri.params.eps / 10))
    throw OverlapError(ErrorCode::GenerationFailed, "connector area exceeds eps^2/10");
}

}  // namespace

ReductionInstance gen_overlap_instance(const SumInstance& src) {
  SumInstance s = normalize(src);
  if (s.A.empty() || s.B.empty() || s.C.empty() || s.D.empty() || s.E.empty())
    throw std::invalid_argument("all five sets must be non-empty");
  ReductionInstance ri;
  ri.variant = "overlap";
  ri.source = s;
  ri.params = make_params(s);
  ri.P = build_p(s, ri.params, true);
  ri.Q = build_q_overlap(s, ri.params);
  const R eps = ri.params.eps;
  ri.threshold = 1 + 3 * eps * eps;
  R gq = 1 + R(i64(s.D.size() + s.E.size() + 1)) * eps * eps;
  ri.connector_area = (general_area(ri.P) - gadget_area_p(s, ri.params, true)) + (general_area(ri.Q) - gq);
  check_budget(ri);
  attach_gadgets(ri);
  return ri;
}

ReductionInstance gen_containment_instance(const SumInstance& src) {
  SumInstance s = normalize(src);
  s.D.clear();
  s.E.clear();
  if (s.A.empty() || s.B.empty() || s.C.empty()) throw std::invalid_argument("A, B, C must be non-empty");
  ReductionInstance ri;
  ri.variant = "containment";
  ri.source = s;
  ri.params = make_params(s);
  ri.P = build_p(s, ri.params, false);
  ri.Q = build_q_containment(ri.params);
  const R eps = ri.params.eps;
  ri.threshold = general_area(ri.Q);
  ri.connector_area = (general_area(ri.P) - gadget_area_p(s, ri.params, false)) + (ri.threshold - 1 - 3 * eps * eps);
  check_budget(ri);
  attach_gadgets(ri);
  return ri;
}

std::vector<Candidate> reduction_candidates(const ReductionInstance& ri) {
  const SumInstance& s = ri.source;
  const R eps = ri.params.eps;
  std::vector<i64> zero{0};
  const std::vector<i64>& D = s.D.empty() ? zero : s.D;
  const std::vector<i64>& E = s.E.empty() ? zero : s.E;
  std::vector<Candidate> out;
  for (size_t i = 0; i < s.B.size(); ++i)
    for (size_t k = 0; k < D.size(); ++k)
      for (size_t j = 0; j < s.C.size(); ++j)
        for (size_t l = 0; l < E.size(); ++l)
          out.push_back({s.B[i] + D[k] + R(3 * i64(i) + 1) * eps, s.C[j] + E[l] + R(3 * i64(j) + 1) * eps, i, k, j, l});
  return out;
}

namespace {

i128 lattice(const R& v, const BigInt& L) {
  R s = v * L;
  if (denominator(s) != 1) throw std::logic_error("value off lattice");
  return to_i128(numerator(s));
}

i128 uniform128(std::mt19937_64& rng, i128 lo, i128 hi) {
  unsigned __int128 span = (unsigned __int128)(hi - lo) + 1;
  unsigned __int128 r = ((unsigned __int128)rng() << 64) | rng();
  return lo + (i128)(r % span);
}

}  // namespace

CertReport certify_reduction(const ReductionInstance& ri, const CertifyOptions& opt) {
  CertReport rep;
  const bool containment = ri.variant == "containment";
  const SumInstance& s = ri.source;
  if (s.A.size() > 4 || s.B.size() > 4 || s.C.size() > 4 || s.D.size() > 2 || s.E.size() > 2)
    throw OverlapError(ErrorCode::InstanceTooLarge, "certification is limited to n <= 4, m <= 2");
  GeneralAreaEvaluator ev(ri.P, ri.Q);
  const BigInt& L = ev.scale();
  const BigInt two_l2 = 2 * L * L;
  const Wide thr2 = Wide(lattice(ri.threshold * two_l2, 1));
  auto to_r = [&](const Wide& v) { return R(BigInt(v), two_l2); };

  rep.witness = solve_32sum_brute(s);
  rep.sat = rep.witness.has_value();
  const R eps = ri.params.eps;
  if (rep.witness) {
    const Witness& wt = *rep.witness;
    rep.integrality_ok = wt.a == wt.b + wt.c + wt.d + wt.e;
    R tx = wt.d + wt.b + R(3 * i64(wt.ib) + 1) * eps, ty = wt.e + wt.c + R(3 * i64(wt.ic) + 1) * eps;
    Wide a = ev.twice_area_scaled(lattice(tx, L), lattice(ty, L));
    rep.forward_area = to_r(a);
    rep.forward_ok = a >= thr2;
  }

  std::vector<Candidate> cands = reduction_candidates(ri);
  std::vector<std::pair<i128, i128>> cl;
  Wide best = -1;
  for (const Candidate& c : cands) {
    cl.push_back({lattice(c.x, L), lattice(c.y, L)});
    Wide a = ev.twice_area_scaled(cl.back().first, cl.back().second);
    if (a > best) best = a;
  }
  rep.candidates = cands.size();
  rep.sweep_max = to_r(best);
  rep.sweep_verdict = best >= thr2;
  rep.sweep_ok = rep.sweep_verdict == rep.sat;

  std::mt19937_64 rng(opt.seed);
  const i128 Ml = lattice(R(ri.params.M), L), Ll = lattice(R(1), L), el = lattice(eps, L);
  auto jitter = [&]() {
    const auto& c = cl[size_t(rng() % cl.size())];
    i128 r = (rng() % 2) ? 3 * el : Ll;
    return std::make_pair(c.first + uniform128(rng, -r, r), c.second + uniform128(rng, -r, r));
  };
  Wide smax = -1;
  for (size_t t = 0; t < opt.samples; ++t) {
    std::pair<i128, i128> tau =
        (t % 2 == 0) ? std::make_pair(uniform128(rng, -Ll, Ml + Ll), uniform128(rng, -Ll, Ml + Ll)) : jitter();
    Wide a = ev.twice_area_scaled(tau.first, tau.second);
    if (a > smax) smax = a;
    if (a >= thr2) ++rep.samples_reaching;
  }
  rep.samples = opt.samples;
  rep.sample_max = to_r(smax);
  rep.sampling_ok = rep.sat || rep.samples_reaching == 0;

  // the verifier meets P only inside diagonal prongs
  GeneralAreaEvaluator ver(ri.P, ri.verifier, L);
  std::vector<GeneralAreaEvaluator> prongs;
  for (const GeneralPolygon& d : ri.diagonal_prongs) prongs.emplace_back(d, ri.verifier, L);
  for (size_t t = 0; t < opt.isolation_samples; ++t) {
    auto tau = jitter();
    Wide whole = ver.twice_area_scaled(tau.first, tau.second), parts = 0;
    for (const auto& pe : prongs) parts += pe.twice_area_scaled(tau.first, tau.second);
    if (whole != parts) rep.isolation_ok = false;
    ++rep.isolation_checks;
  }

  // translations outside [-1, M+1]^2
  const Wide one2 = Wide(lattice(R(two_l2), 1));
  for (size_t t = 0; t < opt.outside_samples; ++t) {
    i128 x, y;
    do {
      x = uniform128(rng, -3 * Ml, 4 * Ml);
      y = uniform128(rng, -3 * Ml, 4 * Ml);
    } while (x >= -Ll && x <= Ml + Ll && y >= -Ll && y <= Ml + Ll);
    Wide a = ev.twice_area_scaled(x, y);
    bool ok = containment ? a < thr2 : a <= one2;
    if (!ok) rep.outside_ok = false;
    ++rep.outside_checks;
  }
  rep.connector_ok = ri.connector_area >= 0 && ri.connector_area < eps * eps / 10;
  return rep;
}

}  // namespace overlap
