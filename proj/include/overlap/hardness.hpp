#pragma once

#include "overlap/general_area.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace overlap {

struct SumInstance {
  std::vector<i64> A, B, C, D, E;  // D, E empty for a 3-SUM instance
};

// sorts, deduplicates, and checks positivity
SumInstance normalize(SumInstance s);

struct Witness {
  i64 a, b, c, d, e;
  size_t ia, ib, ic, id, ie;
};

// a = b + c + d + e; empty D or E act as {0}
std::optional<Witness> solve_32sum_brute(const SumInstance& s, std::uint64_t limit = 100000000);

struct ReductionParams {
  i64 M = 0;
  Rational eps, connector_width, diag_width;
  size_t n = 0, m = 0;
};

struct ReductionInstance {
  std::string variant;  // "overlap" or "containment"
  GeneralPolygon P, Q;
  Rational threshold;
  ReductionParams params;
  SumInstance source;
  Rational connector_area;  // total area not belonging to any gadget
  std::vector<GeneralPolygon> diagonal_prongs;
  GeneralPolygon verifier;
};

ReductionInstance gen_overlap_instance(const SumInstance& s);
ReductionInstance gen_containment_instance(const SumInstance& s);

// candidate translations, one per (i,k,j,l)
struct Candidate {
  Rational x, y;
  size_t i, k, j, l;
};
std::vector<Candidate> reduction_candidates(const ReductionInstance& ri);

struct CertifyOptions {
  size_t samples = 1000;
  size_t isolation_samples = 100;
  size_t outside_samples = 100;
  std::uint64_t seed = 1;
};

struct CertReport {
  bool sat = false;
  std::optional<Witness> witness;
  bool integrality_ok = true;
  bool forward_ok = true;  // vacuous when unsat
  Rational forward_area = 0;
  bool sweep_verdict = false;
  bool sweep_ok = false;
  size_t candidates = 0;
  Rational sweep_max = 0;
  size_t samples = 0;
  size_t samples_reaching = 0;
  bool sampling_ok = true;
  Rational sample_max = 0;
  size_t isolation_checks = 0;
  bool isolation_ok = true;
  size_t outside_checks = 0;
  bool outside_ok = true;
  bool connector_ok = true;
  bool pass() const {
    return integrality_ok && forward_ok && sweep_ok && sampling_ok && isolation_ok && outside_ok && connector_ok;
  }
};

CertReport certify_reduction(const ReductionInstance& ri, const CertifyOptions& opt = {});

}  // namespace overlap
