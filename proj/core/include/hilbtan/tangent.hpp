#pragma once

// Graded tangent spaces to nested Hilbert schemes at homogeneous nestings.
//
// A degree-e tangent vector at I^(1) >= ... >= I^(r) is a tuple of maps
// L^i_d : I^i_d -> (R/I^i)_{d+e} commuting with the variables, such that
// (R/I^(i+1) -> R/I^(i)) o L^(i+1) agrees with L^i on I^(i+1).

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hilbtan/ideal.hpp"
#include "hilbtan/module.hpp"

namespace hilbtan {

/// Chain I^(1) >= I^(2) >= ... >= I^(r) of m-primary ideals over one ring.
template <typename F>
class Nesting {
 public:
  explicit Nesting(std::vector<HomogeneousIdeal<F>> ideals) : ideals_(std::move(ideals)) {
    if (ideals_.empty()) throw Error(ErrorKind::NotNested, "empty nesting");
    for (std::size_t i = 0; i < ideals_.size(); ++i) {
      if (!ideals_[i].is_m_primary()) {
        throw Error(ErrorKind::NotMPrimary, "ideal " + std::to_string(i + 1) + " of the nesting is not m-primary");
      }
      if (ideals_[i].nvars() != ideals_[0].nvars()) throw Error(ErrorKind::NotNested, "ideals live in different rings");
    }
    for (std::size_t i = 0; i + 1 < ideals_.size(); ++i) {
      if (!ideals_[i].contains(ideals_[i + 1])) {
        throw Error(ErrorKind::NotNested, "ideal " + std::to_string(i + 2) + " is not contained in ideal " +
                                              std::to_string(i + 1));
      }
    }
  }

  std::size_t length() const { return ideals_.size(); }
  const HomogeneousIdeal<F>& operator[](std::size_t i) const { return ideals_[i]; }
  const std::vector<HomogeneousIdeal<F>>& ideals() const { return ideals_; }
  const F& field() const { return ideals_.front().field(); }
  const RingPtr& ring() const { return ideals_.front().ring(); }
  int nvars() const { return ideals_.front().nvars(); }

  std::vector<HilbertFunction> hilbert_functions() const {
    std::vector<HilbertFunction> out;
    for (const auto& I : ideals_) out.push_back(I.hilbert_function());
    return out;
  }
  std::vector<std::size_t> colengths() const {
    std::vector<std::size_t> out;
    for (const auto& I : ideals_) out.push_back(I.colength());
    return out;
  }
  /// Largest degree of a minimal generator over all ideals.
  int max_generator_degree() const {
    int best = 0;
    for (const auto& I : ideals_) best = std::max(best, I.max_generator_degree());
    return best;
  }
  /// Degrees outside [-D_gen, max(s_i - o_i)] carry no tangent vectors.
  std::pair<int, int> degree_window() const {
    int hi = 0;
    for (const auto& I : ideals_) hi = std::max(hi, I.socle_degree() - I.order());
    return {-max_generator_degree(), hi};
  }

 private:
  std::vector<HomogeneousIdeal<F>> ideals_;
};

namespace detail {

/// Coordinates of v in the echelon basis of S, as a sparse row; v must lie in S.
template <typename F>
SparseRow<F> sparse_coords(const Subspace<F>& S, const SparseRow<F>& v) {
  SparseRow<F> out;
  for (const auto& [c, x] : v) {
    if (auto p = S.pivot_index(c); p >= 0) out.emplace_back(static_cast<std::uint32_t>(p), x);
  }
  return out;
}

template <typename F>
struct NestedSystem {
  BlockSystem<F> sys;
  std::vector<std::map<int, int>> blocks;  // blocks[i][d] : I^i_d -> (R/I^i)_{d+e}

  int block(std::size_t i, int d) const {
    auto it = blocks[i].find(d);
    return it == blocks[i].end() ? -1 : it->second;
  }
};

template <typename F>
NestedSystem<F> nested_system(const Nesting<F>& nest, int e) {
  const F& field = nest.field();
  const RingCtx& ring = *nest.ring();
  const std::size_t r = nest.length();
  NestedSystem<F> out{BlockSystem<F>(field), std::vector<std::map<int, int>>(r)};
  auto& sys = out.sys;
  auto q = [&](std::size_t i, int d) -> std::size_t { return d < 0 ? 0 : ring.dim(d) - nest[i].dim(d); };

  for (std::size_t i = 0; i < r; ++i) {
    const auto& I = nest[i];
    for (int d = std::max(I.order(), -e); d <= I.socle_degree() - e; ++d) {
      int b = sys.add_block(q(i, d + e), I.dim(d));
      if (b >= 0) out.blocks[i][d] = b;
    }
  }

  // L_{d+1}(x_j f) = x_j L_d(f)
  for (std::size_t i = 0; i < r; ++i) {
    const auto& I = nest[i];
    auto Q = quotient_module(I);
    for (int d = I.order(); d <= I.socle_degree() - e - 1; ++d) {
      std::size_t tdim = q(i, d + e + 1);
      if (tdim == 0) continue;
      const auto& Id = I.piece(d);
      const auto& In = I.piece(d + 1);
      int bd = out.block(i, d), bn = out.block(i, d + 1);
      std::size_t sdim = q(i, d + e);
      for (int j = 0; j < ring.nvars(); ++j) {
        const Matrix<F>* A = bd >= 0 ? Q.action(d + e, j) : nullptr;
        for (std::size_t c = 0; c < Id.dim(); ++c) {
          auto xc = sparse_coords(In, times_var(ring, Id.basis()[c], d, j));
          for (std::size_t t = 0; t < tdim; ++t) {
            std::map<std::uint32_t, typename F::Elem> eq;
            for (const auto& [k, x] : xc) sys.term(eq, bn, t, k, x);
            if (A != nullptr) {
              for (std::size_t u = 0; u < sdim; ++u) sys.term(eq, bd, u, c, field.neg(A->at(t, u)));
            }
            sys.add_equation(eq);
          }
        }
      }
    }
  }

  // pi o L^(i+1) = L^(i) on I^(i+1)
  for (std::size_t i = 0; i + 1 < r; ++i) {
    const auto& I = nest[i];
    const auto& J = nest[i + 1];
    for (int d = std::max(J.order(), -e); d <= I.socle_degree() - e; ++d) {
      std::size_t tdim = q(i, d + e);
      if (tdim == 0) continue;
      const auto& Jq = J.piece(d + e);
      const auto& Iq = I.piece(d + e);
      std::vector<Vec<F>> proj;  // proj[u] = image of the u-th standard monomial of R/J
      for (auto f : Jq.free_columns()) proj.push_back(Iq.quotient_coords(SparseRow<F>{{f, field.one()}}));
      int bi = out.block(i, d), bj = out.block(i + 1, d);
      const auto& Jd = J.piece(d);
      for (std::size_t c = 0; c < Jd.dim(); ++c) {
        auto gc = sparse_coords(I.piece(d), Jd.basis()[c]);
        for (std::size_t t = 0; t < tdim; ++t) {
          std::map<std::uint32_t, typename F::Elem> eq;
          for (const auto& [k, x] : gc) sys.term(eq, bi, t, k, x);
          for (std::size_t u = 0; u < proj.size(); ++u) sys.term(eq, bj, u, c, field.neg(proj[u][t]));
          sys.add_equation(eq);
        }
      }
    }
  }
  return out;
}

}  // namespace detail

/// Degree-e tangent vectors: one map per ideal and source degree.
template <typename F>
struct NestedTangent {
  int degree = 0;
  std::size_t dim = 0;
  /// basis[k][i][d] : I^i_d -> (R/I^i)_{d+e}
  std::vector<std::vector<std::map<int, Matrix<F>>>> basis;
};

template <typename F>
NestedTangent<F> nested_tangent_graded(const Nesting<F>& nest, int e, bool with_basis = false) {
  auto ns = detail::nested_system(nest, e);
  NestedTangent<F> out;
  out.degree = e;
  if (!with_basis) {
    out.dim = ns.sys.solution_dim();
    return out;
  }
  for (const auto& v : ns.sys.solution_basis()) {
    std::vector<std::map<int, Matrix<F>>> tuple(nest.length());
    for (std::size_t i = 0; i < nest.length(); ++i) {
      for (const auto& [d, b] : ns.blocks[i]) tuple[i].emplace(d, ns.sys.block_of(v, b));
    }
    out.basis.push_back(std::move(tuple));
  }
  out.dim = out.basis.size();
  return out;
}

/// Hom_R(I, R/I)_e with maps stored per source degree.
template <typename F>
GradedHom<F> tangent_graded(const HomogeneousIdeal<F>& I, int e) {
  Nesting<F> nest({I});
  auto t = nested_tangent_graded(nest, e, true);
  GradedHom<F> out;
  out.degree = e;
  out.dim = t.dim;
  out.source_lo = I.order();
  for (auto& tuple : t.basis) out.basis.push_back(std::move(tuple.front()));
  return out;
}

struct ThetaResult {
  std::size_t rank = 0;
  bool all_satisfy = true;  // every derivative tuple solves the degree -1 system
};

/// Span of the n tuples (pi^(i) o d/dx_j) inside the degree -1 tangent space.
template <typename F>
ThetaResult theta(const Nesting<F>& nest) {
  const F& field = nest.field();
  const RingCtx& ring = *nest.ring();
  auto ns = detail::nested_system(nest, -1);
  ThetaResult out;
  Matrix<F> vecs(field, static_cast<std::size_t>(ring.nvars()), ns.sys.unknowns());
  for (int j = 0; j < ring.nvars(); ++j) {
    Vec<F> v(ns.sys.unknowns(), field.zero());
    for (std::size_t i = 0; i < nest.length(); ++i) {
      const auto& I = nest[i];
      for (const auto& [d, b] : ns.blocks[i]) {
        const auto& Id = I.piece(d);
        const auto& target = I.piece(d - 1);
        for (std::size_t c = 0; c < Id.dim(); ++c) {
          auto img = target.quotient_coords(derivative(field, ring, Id.basis()[c], d, j));
          for (std::size_t r = 0; r < img.size(); ++r) v[ns.sys.var(b, r, c)] = img[r];
        }
      }
    }
    if (!ns.sys.satisfies(v)) out.all_satisfy = false;
    for (std::size_t c = 0; c < v.size(); ++c) vecs.at(static_cast<std::size_t>(j), c) = v[c];
  }
  out.rank = ns.sys.unknowns() == 0 ? 0 : rank(vecs);
  return out;
}

enum class TntVerdict { Certified, FailedOverRational, FailedOverPrimeFieldNeedsRationalConfirm };

std::string to_string(TntVerdict v);

struct TangentReport {
  std::vector<std::size_t> colengths;
  std::vector<HilbertFunction> hilbert_functions;
  int e_min = 0, e_max = 0;                // window where tangents may live
  std::map<int, std::size_t> degrees;      // t^{=e}, window plus one degree on each side
  std::size_t t_neg = 0, t_nonneg = 0, total = 0;
  std::size_t theta_rank = 0;
  bool theta_valid = true;
  bool window_edges_vanish = true;
  bool tnt = false;
  TntVerdict verdict = TntVerdict::FailedOverRational;
  std::string field;

  std::size_t at(int e) const {
    auto it = degrees.find(e);
    return it == degrees.end() ? 0 : it->second;
  }
  std::string to_json() const;
  std::string to_text() const;
};

struct TangentOptions {
  unsigned threads = 1;  // degrees computed concurrently
};

template <typename F>
TangentReport tnt_check(const Nesting<F>& nest, TangentOptions opts = {}) {
  TangentReport rep;
  rep.colengths = nest.colengths();
  rep.hilbert_functions = nest.hilbert_functions();
  rep.field = nest.field().name();
  auto [lo, hi] = nest.degree_window();
  rep.e_min = lo;
  rep.e_max = hi;

  std::vector<int> es;
  for (int e = lo - 1; e <= hi + 1; ++e) es.push_back(e);
  std::vector<std::size_t> dims(es.size());
  unsigned threads = std::max(1u, opts.threads);
  for (std::size_t start = 0; start < es.size(); start += threads) {
    std::vector<std::future<std::size_t>> jobs;
    for (std::size_t k = start; k < std::min(es.size(), start + threads); ++k) {
      int e = es[k];
      jobs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                [&nest, e] { return nested_tangent_graded(nest, e).dim; }));
    }
    for (std::size_t k = 0; k < jobs.size(); ++k) dims[start + k] = jobs[k].get();
  }
  for (std::size_t k = 0; k < es.size(); ++k) {
    rep.degrees[es[k]] = dims[k];
    if (es[k] < 0) {
      rep.t_neg += dims[k];
    } else {
      rep.t_nonneg += dims[k];
    }
  }
  rep.total = rep.t_neg + rep.t_nonneg;
  rep.window_edges_vanish = rep.at(lo - 1) == 0 && rep.at(hi + 1) == 0;

  auto th = theta(nest);
  rep.theta_rank = th.rank;
  rep.theta_valid = th.all_satisfy;
  bool below = true;
  for (const auto& [e, t] : rep.degrees) {
    if (e <= -2 && t != 0) below = false;
  }
  rep.tnt = below && rep.theta_rank == rep.at(-1);
  if (rep.tnt) {
    rep.verdict = TntVerdict::Certified;
  } else if constexpr (std::is_same_v<F, PrimeField>) {
    rep.verdict = TntVerdict::FailedOverPrimeFieldNeedsRationalConfirm;
  } else {
    rep.verdict = TntVerdict::FailedOverRational;
  }
  return rep;
}

/// Inserts m^k after position j (0 puts it first, r appends it last).
template <typename F>
Nesting<F> sandwich_insert(const Nesting<F>& nest, std::size_t j, int k) {
  const std::size_t r = nest.length();
  if (j > r) throw Error(ErrorKind::OutOfRange, "insertion position beyond the nesting");
  if (k < 1) throw Error(ErrorKind::NotStrictlySandwiched, "m^k needs k >= 1");
  auto mk = HomogeneousIdeal<F>::power_of_max(nest.field(), nest.ring(), k);
  if (j > 0) {
    const auto& upper = nest[j - 1];
    if (!upper.contains(mk) || upper.equals(mk)) {
      throw Error(ErrorKind::NotStrictlySandwiched, "ideal " + std::to_string(j) + " does not strictly contain m^" +
                                                        std::to_string(k));
    }
  }
  if (j < r) {
    const auto& lower = nest[j];
    if (!mk.contains(lower) || mk.equals(lower)) {
      throw Error(ErrorKind::NotStrictlySandwiched, "m^" + std::to_string(k) + " does not strictly contain ideal " +
                                                        std::to_string(j + 1));
    }
  }
  std::vector<HomogeneousIdeal<F>> ideals = nest.ideals();
  ideals.insert(ideals.begin() + static_cast<std::ptrdiff_t>(j), mk);
  return Nesting<F>(std::move(ideals));
}

/// Total dimension of Hom_R(m^k / I^(j+1), I^(j) / m^k), with I^(0) = R and I^(r+1) = 0.
template <typename F>
std::map<int, std::size_t> sandwich_hom(const Nesting<F>& nest, std::size_t j, int k) {
  const F& field = nest.field();
  const auto& ring = nest.ring();
  const std::size_t r = nest.length();
  auto mk = HomogeneousIdeal<F>::power_of_max(field, ring, k);
  auto upper = j == 0 ? HomogeneousIdeal<F>::unit(field, ring) : nest[j - 1];
  auto N = subquotient_module(upper, mk);
  std::map<int, std::size_t> out;
  if (N.dims.empty()) return out;
  if (j < r) {
    auto M = subquotient_module(mk, nest[j]);
    auto [lo, hi] = hom_degree_window(M, N);
    for (int e = lo; e <= hi; ++e) {
      if (auto d = graded_hom(M, N, e, false).dim) out[e] = d;
    }
    return out;
  }
  // m^k itself: generated in degree k, so e >= N.lo - k, and a carrier reaching
  // N.hi - e + 1 sees every relation.
  int top = k + N.hi() - N.lo + 1;
  auto zero = HomogeneousIdeal<F>::zero(field, ring, top);
  auto M = subquotient_module(mk, zero, top);
  for (int e = N.lo - k; e <= N.hi() - k; ++e) {
    if (auto d = graded_hom(M, N, e, false).dim) out[e] = d;
  }
  return out;
}

struct SandwichReport {
  std::size_t position = 0;
  int k = 0;
  TangentReport base, enlarged;
  std::map<int, std::size_t> hom_by_degree;
  std::size_t hom_dim = 0;

  bool lemma_hypotheses = false;  // base nesting has TNT
  std::int64_t lemma_discrepancy = 0;  // enlarged t^{<0} - (base t^{<0} + hom)

  bool prop_hypotheses = false;  // two ideals, inserted between them, t^{<0} only in degree -1
  std::int64_t jump = 0;             // enlarged t^{=-1} - base t^{=-1}
  std::int64_t jump_statement = 0;   // dim (R/I^(j+1))_k * dim I^(j)_{k-1}
  std::int64_t jump_example = 0;     // dim (R/I^(j+1))_{k-1} * dim I^(j)_{k-1}
  bool nonneg_unchanged = false;
  bool projection_bound = false;  // enlarged t^{=-1} >= base t^{=-1}

  /// Which candidate matches enlarged t^{<0} - base t^{=-1}: "statement",
  /// "example", "statement+1", "example+1" or "none".
  std::string matched_convention() const;
  std::string to_json() const;
};

template <typename F>
SandwichReport sandwich_identity_check(const Nesting<F>& nest, std::size_t j, int k, TangentOptions opts = {}) {
  SandwichReport rep;
  rep.position = j;
  rep.k = k;
  auto bigger = sandwich_insert(nest, j, k);
  rep.base = tnt_check(nest, opts);
  rep.enlarged = tnt_check(bigger, opts);
  rep.hom_by_degree = sandwich_hom(nest, j, k);
  for (const auto& [e, d] : rep.hom_by_degree) rep.hom_dim += d;

  auto i64 = [](std::size_t x) { return static_cast<std::int64_t>(x); };
  rep.lemma_hypotheses = rep.base.tnt;
  rep.lemma_discrepancy = i64(rep.enlarged.t_neg) - i64(rep.base.t_neg) - i64(rep.hom_dim);

  const auto& ring = *nest.ring();
  auto lower_q = [&](int d) -> std::int64_t {
    if (d < 0) return 0;
    return j < nest.length() ? i64(ring.dim(d) - nest[j].dim(d)) : i64(ring.dim(d));
  };
  auto upper_dim = [&](int d) -> std::int64_t {
    if (d < 0) return 0;
    return j > 0 ? i64(nest[j - 1].dim(d)) : i64(ring.dim(d));
  };
  rep.prop_hypotheses = nest.length() == 2 && j == 1 && rep.base.t_neg == rep.base.at(-1);
  rep.jump = i64(rep.enlarged.at(-1)) - i64(rep.base.at(-1));
  rep.jump_statement = lower_q(k) * upper_dim(k - 1);
  rep.jump_example = lower_q(k - 1) * upper_dim(k - 1);
  rep.nonneg_unchanged = rep.enlarged.t_nonneg == rep.base.t_nonneg;
  rep.projection_bound = rep.enlarged.at(-1) >= rep.base.at(-1);
  return rep;
}

}  // namespace hilbtan
