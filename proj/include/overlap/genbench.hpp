#pragma once

#include "overlap/solvers.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace overlap {

OrthoPolygon gen_random_ortho(int n_target, std::uint64_t seed, i64 coord_range = 4096);

// Two downward-pronged combs with k prongs each; P has pitch `spacing`,
// Q has pitch `spacing + 1`, prong depths step by the same amounts.
std::pair<OrthoPolygon, OrthoPolygon> gen_comb_pair(int k, int spacing = 0);

struct BenchRecord {
  std::string family;
  size_t n = 0, m = 0;
  std::string algo;
  int trial = 0;
  std::uint64_t seed = 0;
  std::uint64_t wall_ns = 0;
  std::vector<std::pair<std::string, std::uint64_t>> ops;
  i128 area = 0;
  std::uint64_t op(const std::string& name) const;
};

struct SlopeFit {
  std::string algo;
  double ops_slope = 0, wall_slope = 0;
  size_t sizes = 0;
};

struct BenchConfig {
  std::string family = "comb";
  std::vector<int> sizes{32, 64, 128, 256};
  std::vector<std::string> algos{"fast", "baseline"};
  int trials = 1;
  std::uint64_t seed = 1;
  double budget_seconds = 900;
  std::function<void(const BenchRecord&)> on_record;
};

struct BenchResult {
  std::vector<BenchRecord> records;
  std::vector<SlopeFit> fits;
  bool budget_exceeded = false;
};

BenchResult run_bench(const BenchConfig& cfg);
std::vector<SlopeFit> fit_slopes(const std::vector<BenchRecord>& records);
double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y);

std::string bench_csv_header();
std::string bench_csv_rows(const BenchRecord& r);
std::vector<BenchRecord> parse_bench_csv(const std::string& text);

}  // namespace overlap
