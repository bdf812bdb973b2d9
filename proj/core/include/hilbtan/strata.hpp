#pragma once

// Closed-form dimensions of Hilbert-Samuel strata, the smoothability gap for
// the ((1,s),(1,n,2)) nestings, and the (n, s) census built on top of them.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hilbtan/families.hpp"
#include "hilbtan/tangent.hpp"

namespace hilbtan {

/// n * d_r: dimension of the smoothable component for colengths d_1 <= .. <= d_r.
std::int64_t smoothable_dim(const std::vector<std::int64_t>& colengths, int n);

struct TwoStepDim {
  std::int64_t value = 0;
  int order = 0;                 // k
  bool without_linear_syzygies = true;
  std::string warning;           // set when the formula is returned outside its hypotheses
};

/// dim H^n_q = h(k) q(k) + (h(k+1) - (n-1) h(k)) q(k+1), h = h_R - q.
///
/// Throws NotTwoStep unless m^{k+2} in I in m^k, and HasLinearSyzygies when
/// h(k+1) - n h(k) < 0. The exception is q(k+1) = 0: the second term is gone
/// and the value comes back with a warning.
TwoStepDim two_step_stratum_dim(const HilbertFunction& q, int n);

/// 2 (binom(n+1, 2) - 2), the Grassmannian Gr(2, R_2).
std::int64_t compressed_1n2_dim(int n);

/// compressed_1n2_dim(n) + s (n - s).
std::int64_t nested_stratum_dim_1s_1n2(int n, int s);

enum class GapVerdict { NonSmoothableByDimension, Boundary, Inconclusive };

std::string to_string(GapVerdict v);

struct GapReport {
  int n = 0, s = 0;
  std::int64_t dim_smoothable = 0;
  std::int64_t dim_stratum_total = 0;  // stratum plus n for the support
  std::int64_t gap = 0;
  GapVerdict verdict = GapVerdict::Inconclusive;
};

/// The subtraction, for any 0 <= s <= n.
GapReport gap_report(int n, int s);
/// Same, restricted to 2 <= s <= n-2 and n >= 4.
GapReport gap(int n, int s);

struct Lemma27Reduction {
  int base_n = 0;  // h(1)
  std::int64_t offset = 0;
};

/// dim H^n_h = dim H^{h(1)}_h + h1 (n - h1) + (n - h1)(|h| - h1 - 1).
Lemma27Reduction lemma27_reduce(const HilbertFunction& h, int n);

struct NonReducednessReport {
  std::size_t position = 0;
  int k = 0;
  std::int64_t dim_v = 0;             // t^{>=0} at the base plus n
  std::size_t base_defect = 0;        // t^{<0} - rank theta at the base
  std::size_t sandwich_defect = 0;    // same at the sandwiched nesting
  std::size_t sandwich_total = 0;
  std::size_t sandwich_nonneg = 0;
  std::size_t sandwich_theta_rank = 0;
  bool certified = false;
  TangentReport base, sandwiched;

  std::string to_json() const;
};

template <typename F>
NonReducednessReport nonreducedness_certificate(const Nesting<F>& nest, std::size_t j, int k,
                                                TangentOptions opts = {}) {
  NonReducednessReport rep;
  rep.position = j;
  rep.k = k;
  auto bigger = sandwich_insert(nest, j, k);
  rep.base = tnt_check(nest, opts);
  if (!rep.base.tnt) throw Error(ErrorKind::HypothesesNotMet, "base nesting does not have TNT");
  rep.sandwiched = tnt_check(bigger, opts);
  rep.dim_v = static_cast<std::int64_t>(rep.base.t_nonneg) + nest.nvars();
  rep.base_defect = rep.base.t_neg - rep.base.theta_rank;
  rep.sandwich_defect = rep.sandwiched.t_neg - rep.sandwiched.theta_rank;
  rep.sandwich_total = rep.sandwiched.total;
  rep.sandwich_nonneg = rep.sandwiched.t_nonneg;
  rep.sandwich_theta_rank = rep.sandwiched.theta_rank;
  rep.certified = rep.base_defect == 0 && rep.sandwich_defect > 0;
  return rep;
}

struct ThmCReport {
  int multiplicity = 0;
  bool covered = false;
  HilbertFunction q;
  std::int64_t length = 0;  // |q|
  std::int64_t stratum_dim = 0;
  std::int64_t smoothable_dim = 0;
  int containment_power = 0;  // every I with h of this length contains m^power
  std::optional<HilbertFunction> iarrobino;
  std::int64_t iarrobino_length = 0;

  std::string to_json() const;
  std::string to_text() const;
};

ThmCReport thmC_report(int multiplicity);

struct CensusRecord {
  int n = 0, s = 0;
  std::string field;
  std::uint64_t seed = 0;
  std::int64_t gap = 0;
  std::string verdict;             // gap verdict
  bool has_family = false;         // 2 <= s <= n-2
  std::int64_t t_minus_one = -1;
  std::int64_t t_nonneg = -1;
  std::int64_t theta_rank = -1;
  std::string tnt;                 // empty without a family
  bool stratum_bound_ok = true;    // t^{>=0} >= stratum dimension
  std::string error;
  double elapsed_ms = 0;

  std::string key() const;
  std::string to_json() const;
  static CensusRecord from_json(const std::string& line);
};

/// Gap and, inside the family range, the tangent report at [I1(s) > I2].
CensusRecord census_cell(int n, int s, const FieldSpec& field, std::uint64_t seed);

struct CensusOptions {
  int n_lo = 4, n_hi = 8;
  FieldSpec field = FieldSpec::prime_field(32003);
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string store;  // JSONL path; empty keeps records in memory only
  std::function<void(const CensusRecord&)> on_record;
};

/// Runs every (n, s) cell with n_lo <= n <= n_hi and 0 <= s <= n, skipping
/// keys already in the store. Returns all records for the range, stored ones
/// included, in grid order.
std::vector<CensusRecord> census(const CensusOptions& opts);

/// Rows n, columns s, cells "gap^t" (just "gap" outside the family).
std::string census_csv(const std::vector<CensusRecord>& records);

}  // namespace hilbtan
