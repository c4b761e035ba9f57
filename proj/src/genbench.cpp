#include "overlap/genbench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace overlap {

OrthoPolygon gen_random_ortho(int n_target, std::uint64_t seed, i64 coord_range) {
  if (n_target < 4 || n_target % 2) throw std::invalid_argument("n_target must be even and >= 4");
  if (coord_range < 4 || coord_range > kMaxCoord) throw std::invalid_argument("coord_range out of bounds");
  std::mt19937_64 rng(seed);
  auto uni = [&](i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng); };
  const int cmax = std::max(1, n_target / 4);
  for (int attempt = 0; attempt < 200; ++attempt) {
    int c = int(uni(std::max(1, cmax / 2), cmax));
    if (c + 1 > coord_range) c = int(coord_range - 1);
    std::set<i64> xs;
    while (int(xs.size()) < c + 1) xs.insert(uni(0, coord_range));
    std::vector<i64> X(xs.begin(), xs.end());
    std::vector<i64> bot(static_cast<size_t>(c)), top(static_cast<size_t>(c));
    for (int i = 0; i < c; ++i) {
      for (;;) {
        i64 a = uni(0, coord_range), b = uni(0, coord_range);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (i > 0 && !(std::max(a, bot[size_t(i - 1)]) < std::min(b, top[size_t(i - 1)]))) continue;
        bot[size_t(i)] = a;
        top[size_t(i)] = b;
        break;
      }
    }
    std::vector<Point> v;
    v.push_back({X[0], bot[0]});
    for (int i = 0; i < c; ++i) {
      v.push_back({X[size_t(i + 1)], bot[size_t(i)]});
      if (i + 1 < c) v.push_back({X[size_t(i + 1)], bot[size_t(i + 1)]});
    }
    for (int i = c - 1; i >= 0; --i) {
      v.push_back({X[size_t(i + 1)], top[size_t(i)]});
      v.push_back({X[size_t(i)], top[size_t(i)]});
    }
    if (uni(0, 1))
      for (Point& p : v) std::swap(p.x, p.y);
    try {
      OrthoPolygon p = validate_polygon(v);
      int n = int(p.size());
      if (n >= n_target / 2 && n <= n_target) return p;
    } catch (const OverlapError&) {
    }
  }
  throw OverlapError(ErrorCode::GenerationFailed, "no polygon with the requested vertex count");
}

namespace {

OrthoPolygon comb(int k, i64 pitch, i64 height) {
  std::vector<Point> v;
  auto depth = [&](int i) { return pitch * (i + 1); };
  for (int i = 0; i < k; ++i) {
    i64 x = pitch * i;
    if (i > 0) v.push_back({x, 0});
    v.push_back({x, -depth(i)});
    v.push_back({x + 1, -depth(i)});
    if (i + 1 < k) v.push_back({x + 1, 0});
  }
  i64 xr = pitch * (k - 1) + 1;
  v.push_back({xr, height});
  v.push_back({0, height});
  return validate_polygon(v);
}

}  // namespace

std::pair<OrthoPolygon, OrthoPolygon> gen_comb_pair(int k, int spacing) {
  if (k < 2) throw std::invalid_argument("comb needs at least 2 prongs");
  i64 p = spacing > 0 ? spacing : k;
  if (p < 2) p = 2;
  return {comb(k, p, p), comb(k, p + 1, p + 1)};
}

std::uint64_t BenchRecord::op(const std::string& name) const {
  for (const auto& [k, v] : ops)
    if (k == name) return v;
  return 0;
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
  size_t n = x.size();
  if (n < 2) return 0;
  double mx = 0, my = 0;
  for (size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= double(n);
  my /= double(n);
  double sxy = 0, sxx = 0;
  for (size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxx > 0 ? sxy / sxx : 0;
}

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::vector<SlopeFit> fit_slopes(const std::vector<BenchRecord>& records) {
  std::map<std::string, std::map<std::pair<size_t, size_t>, std::pair<std::vector<double>, std::vector<double>>>> g;
  std::vector<std::string> order;
  for (const BenchRecord& r : records) {
    if (!g.count(r.algo)) order.push_back(r.algo);
    auto& cell = g[r.algo][{r.n, r.m}];
    cell.first.push_back(double(r.op("work")));
    cell.second.push_back(double(r.wall_ns));
  }
  std::vector<SlopeFit> out;
  for (const std::string& a : order) {
    std::vector<double> lx, lo, lw;
    for (const auto& [nm, cell] : g[a]) {
      lx.push_back(std::log(double(nm.first) * double(nm.second)));
      lo.push_back(std::log(std::max(1.0, median(cell.first))));
      lw.push_back(std::log(std::max(1.0, median(cell.second))));
    }
    out.push_back({a, least_squares_slope(lx, lo), least_squares_slope(lx, lw), lx.size()});
  }
  return out;
}

BenchResult run_bench(const BenchConfig& cfg) {
  BenchResult res;
  auto t0 = std::chrono::steady_clock::now();
  for (int size : cfg.sizes) {
    for (int trial = 0; trial < cfg.trials; ++trial) {
      std::uint64_t seed = cfg.seed * 1000003ull + std::uint64_t(size) * 7919ull;
      OrthoPolygon P, Q;
      if (cfg.family == "comb") {
        std::tie(P, Q) = gen_comb_pair(std::max(2, size / 4));
      } else if (cfg.family == "random") {
        int n = std::max(4, size - size % 2);
        P = gen_random_ortho(n, seed, 4096);
        Q = gen_random_ortho(n, seed ^ 0x5bd1e995ull, 4096);
      } else {
        throw std::invalid_argument("unknown family: " + cfg.family);
      }
      for (const std::string& algo : cfg.algos) {
        double spent = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (spent > cfg.budget_seconds) {
          res.budget_exceeded = true;
          res.fits = fit_slopes(res.records);
          return res;
        }
        OverlapResult r = solve(algo, P, Q);
        BenchRecord rec;
        rec.family = cfg.family;
        rec.n = P.size();
        rec.m = Q.size();
        rec.algo = algo;
        rec.trial = trial;
        rec.seed = seed;
        rec.wall_ns = r.stats.wall_ns;
        rec.ops = r.stats.named();
        rec.area = r.area;
        if (cfg.on_record) cfg.on_record(rec);
        res.records.push_back(std::move(rec));
      }
    }
  }
  res.fits = fit_slopes(res.records);
  return res;
}

std::string bench_csv_header() { return "family,n,m,algo,trial,wall_ns,op_name,op_count\n"; }

std::string bench_csv_rows(const BenchRecord& r) {
  std::string out;
  for (const auto& [name, v] : r.ops)
    out += r.family + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," + r.algo + "," +
           std::to_string(r.trial) + "," + std::to_string(r.wall_ns) + "," + name + "," + std::to_string(v) + "\n";
  return out;
}

std::vector<BenchRecord> parse_bench_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::map<std::tuple<std::string, size_t, size_t, std::string, int>, size_t> index;
  std::vector<BenchRecord> out;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line.rfind("family,", 0) == 0) continue;
    }
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (f.size() != 8) throw std::runtime_error("malformed bench row: " + line);
    auto key = std::make_tuple(f[0], size_t(std::stoull(f[1])), size_t(std::stoull(f[2])), f[3], std::stoi(f[4]));
    auto it = index.find(key);
    if (it == index.end()) {
      BenchRecord r;
      r.family = f[0];
      r.n = std::get<1>(key);
      r.m = std::get<2>(key);
      r.algo = f[3];
      r.trial = std::get<4>(key);
      r.wall_ns = std::stoull(f[5]);
      it = index.emplace(key, out.size()).first;
      out.push_back(std::move(r));
    }
    out[it->second].ops.push_back({f[6], std::stoull(f[7])});
  }
  return out;
}

}  // namespace overlap
