#pragma once

#include <map>
#include <string>
#include <vector>

#include "hilbtan/ideal.hpp"

namespace hilbtan {

/// Finite graded R-module given by per-degree dimensions and the n variable
/// actions X_j : M_d -> M_{d+1}.
///
/// A module may be a truncated carrier of an infinite one (for example the
/// ideal m^k itself): `truncated` is then set and the action out of the top
/// degree is unknown rather than zero.
template <typename F>
struct FiniteGradedModule {
  F field{};
  int nvars = 0;
  int lo = 0;                                       // lowest degree
  std::vector<std::size_t> dims;                    // dims[d - lo]
  std::vector<std::vector<Matrix<F>>> actions;      // actions[d - lo][j] : M_d -> M_{d+1}
  std::vector<std::vector<SparseRow<F>>> labels;    // representatives in R_d, when known
  bool truncated = false;

  int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
  std::size_t dim(int d) const {
    if (d < lo || d > hi()) return 0;
    return dims[static_cast<std::size_t>(d - lo)];
  }
  std::size_t total_dim() const {
    std::size_t s = 0;
    for (auto x : dims) s += x;
    return s;
  }
  /// Action of x_j out of degree d; an empty (0 x 0) matrix when undefined.
  const Matrix<F>* action(int d, int j) const {
    if (d < lo || d >= lo + static_cast<int>(actions.size())) return nullptr;
    return &actions[static_cast<std::size_t>(d - lo)][static_cast<std::size_t>(j)];
  }

  /// True when X_i X_j = X_j X_i at every degree where both composites are defined.
  bool actions_commute() const {
    for (int d = lo; d + 1 < lo + static_cast<int>(actions.size()); ++d) {
      for (int i = 0; i < nvars; ++i) {
        for (int j = i + 1; j < nvars; ++j) {
          Matrix<F> ij = *action(d + 1, i) * *action(d, j);
          Matrix<F> ji = *action(d + 1, j) * *action(d, i);
          if (!(ij == ji)) return false;
        }
      }
    }
    return true;
  }
};

/// A_d / B_d for lo <= d <= hi with the induced variable actions.
///
/// When B is m-primary the window ends at B's socle degree; otherwise `top`
/// must be given and the result is a truncated carrier.
template <typename F>
FiniteGradedModule<F> subquotient_module(const HomogeneousIdeal<F>& A, const HomogeneousIdeal<F>& B, int top = -1) {
  const F& field = A.field();
  const RingCtx& ring = *A.ring();
  bool finite = B.is_m_primary();
  int hi = finite ? B.socle_degree() : top;
  if (!finite && top < 0) throw Error(ErrorKind::CutoffTooSmall, "subquotient by a non m-primary ideal needs a top degree");
  if (finite && top >= 0) hi = std::min(hi, top);

  int check_top = std::max(hi, 0);
  if (finite && A.is_m_primary()) check_top = std::max(check_top, A.socle_degree() + 1);
  for (int d = 0; d <= check_top; ++d) {
    if (!A.piece(d).contains(B.piece(d))) {
      throw Error(ErrorKind::NotNested, "denominator not contained in numerator in degree " + std::to_string(d));
    }
  }

  // Quotient spaces S_d = A_d / B_d inside R_d / B_d coordinates.
  std::vector<Subspace<F>> S;
  for (int d = 0; d <= hi; ++d) {
    const auto& Bd = B.piece(d);
    std::vector<SparseRow<F>> rows;
    for (const auto& row : A.piece(d).basis()) rows.push_back(to_sparse(field, std::span<const typename F::Elem>(Bd.quotient_coords(row))));
    S.push_back(Subspace<F>::span(field, Bd.codim(), rows));
  }

  FiniteGradedModule<F> M;
  M.field = field;
  M.nvars = ring.nvars();
  M.truncated = !finite || (top >= 0 && top < B.socle_degree());
  int lo = 0;
  while (lo <= hi && S[static_cast<std::size_t>(lo)].dim() == 0) ++lo;
  if (lo > hi) {
    M.lo = 0;
    return M;
  }
  M.lo = lo;
  for (int d = lo; d <= hi; ++d) {
    const auto& Sd = S[static_cast<std::size_t>(d)];
    const auto& Bd = B.piece(d);
    M.dims.push_back(Sd.dim());
    std::vector<SparseRow<F>> reps;
    for (const auto& row : Sd.basis()) {
      SparseRow<F> lifted;
      for (const auto& [c, v] : row) lifted.emplace_back(Bd.free_columns()[c], v);
      reps.push_back(std::move(lifted));
    }
    M.labels.push_back(reps);
  }
  for (int d = lo; d < hi; ++d) {
    std::vector<Matrix<F>> acts;
    const auto& reps = M.labels[static_cast<std::size_t>(d - lo)];
    const auto& Bn = B.piece(d + 1);
    const auto& Sn = S[static_cast<std::size_t>(d + 1)];
    for (int j = 0; j < ring.nvars(); ++j) {
      Matrix<F> X(field, Sn.dim(), reps.size());
      for (std::size_t c = 0; c < reps.size(); ++c) {
        auto nf = Bn.quotient_coords(times_var(ring, reps[c], d, j));
        auto img = Sn.coords(to_sparse(field, std::span<const typename F::Elem>(nf)));
        for (std::size_t r = 0; r < img.size(); ++r) X.at(r, c) = img[r];
      }
      acts.push_back(std::move(X));
    }
    M.actions.push_back(std::move(acts));
  }
  return M;
}

template <typename F>
FiniteGradedModule<F> quotient_module(const HomogeneousIdeal<F>& I) {
  auto R = HomogeneousIdeal<F>::unit(I.field(), I.ring());
  return subquotient_module(R, I);
}

/// Linear system whose unknowns are grouped into dense blocks (matrices).
template <typename F>
class BlockSystem {
 public:
  using Elem = typename F::Elem;

  explicit BlockSystem(const F& field) : field_(field) {}

  /// Registers a rows x cols block; returns its id. Empty blocks get id -1.
  int add_block(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) return -1;
    blocks_.push_back({unknowns_, rows, cols});
    unknowns_ += rows * cols;
    return static_cast<int>(blocks_.size()) - 1;
  }

  std::size_t unknowns() const { return unknowns_; }
  std::size_t block_rows(int b) const { return blocks_[static_cast<std::size_t>(b)].rows; }
  std::size_t block_cols(int b) const { return blocks_[static_cast<std::size_t>(b)].cols; }

  /// Global index of entry (r, c) of block b.
  std::uint32_t var(int b, std::size_t r, std::size_t c) const {
    const auto& bl = blocks_[static_cast<std::size_t>(b)];
    return static_cast<std::uint32_t>(bl.offset + r * bl.cols + c);
  }

  /// Adds coefficient * var to an equation being assembled.
  void term(std::map<std::uint32_t, Elem>& eq, int b, std::size_t r, std::size_t c, const Elem& coef) const {
    if (b < 0 || field_.is_zero(coef)) return;
    auto v = var(b, r, c);
    auto it = eq.find(v);
    if (it == eq.end()) {
      eq.emplace(v, coef);
    } else {
      it->second = field_.add(it->second, coef);
    }
  }

  void add_equation(const std::map<std::uint32_t, Elem>& eq) {
    SparseRow<F> row;
    for (const auto& [v, x] : eq) {
      if (!field_.is_zero(x)) row.emplace_back(v, x);
    }
    if (!row.empty()) equations_.push_back(std::move(row));
  }

  const std::vector<SparseRow<F>>& equations() const { return equations_; }
  std::size_t equation_count() const { return equations_.size(); }

  std::size_t rank() const {
    Echelon<F> e(field_, unknowns_);
    for (const auto& r : equations_) e.insert(r);
    return e.rank();
  }

  std::size_t solution_dim() const { return unknowns_ - rank(); }

  std::vector<Vec<F>> solution_basis() const {
    Echelon<F> e(field_, unknowns_);
    for (const auto& r : equations_) e.insert(r);
    return e.kernel_basis();
  }

  /// True when v satisfies every equation.
  bool satisfies(const Vec<F>& v) const {
    for (const auto& r : equations_) {
      Elem s = field_.zero();
      for (const auto& [c, x] : r) s = field_.add(s, field_.mul(x, v[c]));
      if (!field_.is_zero(s)) return false;
    }
    return true;
  }

  /// Extracts block b of a solution vector as a matrix.
  Matrix<F> block_of(const Vec<F>& v, int b) const {
    const auto& bl = blocks_[static_cast<std::size_t>(b)];
    Matrix<F> m(field_, bl.rows, bl.cols);
    for (std::size_t r = 0; r < bl.rows; ++r) {
      for (std::size_t c = 0; c < bl.cols; ++c) m.at(r, c) = v[bl.offset + r * bl.cols + c];
    }
    return m;
  }

 private:
  struct Block {
    std::size_t offset, rows, cols;
  };
  F field_;
  std::vector<Block> blocks_;
  std::size_t unknowns_ = 0;
  std::vector<SparseRow<F>> equations_;
};

/// Degree-e homomorphisms M -> N, each stored as matrices L_d : M_d -> N_{d+e}.
template <typename F>
struct GradedHom {
  int degree = 0;
  std::size_t dim = 0;
  int source_lo = 0;
  std::vector<std::map<int, Matrix<F>>> basis;  // basis[k][d] = L_d
};

namespace detail {

template <typename F>
BlockSystem<F> hom_system(const FiniteGradedModule<F>& M, const FiniteGradedModule<F>& N, int e,
                          std::map<int, int>& block_of_degree) {
  const F& field = M.field;
  BlockSystem<F> sys(field);
  for (int d = M.lo; d <= M.hi(); ++d) block_of_degree[d] = sys.add_block(N.dim(d + e), M.dim(d));
  auto blk = [&](int d) {
    auto it = block_of_degree.find(d);
    return it == block_of_degree.end() ? -1 : it->second;
  };
  if (M.dims.empty() || N.dims.empty()) return sys;
  if (M.truncated && N.dim(M.hi() + e + 1) != 0) {
    throw Error(ErrorKind::CutoffTooSmall, "truncated source does not reach the target's top degree");
  }
  for (int d = M.lo; d <= M.hi(); ++d) {
    std::size_t tdim = N.dim(d + e + 1);
    if (tdim == 0) continue;
    bool top = d == M.hi();
    if (top && M.truncated) continue;
    for (int j = 0; j < M.nvars; ++j) {
      const Matrix<F>* XM = top ? nullptr : M.action(d, j);
      const Matrix<F>* XN = N.action(d + e, j);
      for (std::size_t c = 0; c < M.dim(d); ++c) {
        for (std::size_t t = 0; t < tdim; ++t) {
          std::map<std::uint32_t, typename F::Elem> eq;
          if (XM != nullptr) {
            for (std::size_t k = 0; k < M.dim(d + 1); ++k) sys.term(eq, blk(d + 1), t, k, XM->at(k, c));
          }
          if (XN != nullptr && N.dim(d + e) > 0) {
            for (std::size_t r = 0; r < N.dim(d + e); ++r) sys.term(eq, blk(d), r, c, field.neg(XN->at(t, r)));
          }
          sys.add_equation(eq);
        }
      }
    }
  }
  return sys;
}

}  // namespace detail

/// Hom_R(M, N)_e by solving L_{d+1} X^M_j = X^N_j L_d for all j and d.
template <typename F>
GradedHom<F> graded_hom(const FiniteGradedModule<F>& M, const FiniteGradedModule<F>& N, int e,
                        bool with_basis = true) {
  std::map<int, int> blocks;
  auto sys = detail::hom_system(M, N, e, blocks);
  GradedHom<F> out;
  out.degree = e;
  out.source_lo = M.lo;
  if (!with_basis) {
    out.dim = sys.solution_dim();
    return out;
  }
  for (const auto& v : sys.solution_basis()) {
    std::map<int, Matrix<F>> maps;
    for (const auto& [d, b] : blocks) {
      if (b >= 0) maps.emplace(d, sys.block_of(v, b));
    }
    out.basis.push_back(std::move(maps));
  }
  out.dim = out.basis.size();
  return out;
}

/// Checks L_{d+1} X^M_j - X^N_j L_d = 0 for one hom given degreewise.
template <typename F>
bool hom_residual_is_zero(const FiniteGradedModule<F>& M, const FiniteGradedModule<F>& N, int e,
                          const std::map<int, Matrix<F>>& L) {
  const F& field = M.field;
  auto get = [&](int d) -> std::optional<Matrix<F>> {
    auto it = L.find(d);
    if (it != L.end()) return it->second;
    return std::nullopt;
  };
  for (int d = M.lo; d <= M.hi(); ++d) {
    if (N.dim(d + e + 1) == 0) continue;
    bool top = d == M.hi();
    if (top && M.truncated) continue;
    for (int j = 0; j < M.nvars; ++j) {
      Matrix<F> lhs(field, N.dim(d + e + 1), M.dim(d));
      Matrix<F> rhs(field, N.dim(d + e + 1), M.dim(d));
      if (!top) {
        if (auto next = get(d + 1)) lhs = *next * *M.action(d, j);
      }
      if (auto cur = get(d); cur && N.action(d + e, j) != nullptr) rhs = *N.action(d + e, j) * *cur;
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

/// Range of e with Hom(M, N)_e possibly nonzero, for finite M.
template <typename F>
std::pair<int, int> hom_degree_window(const FiniteGradedModule<F>& M, const FiniteGradedModule<F>& N) {
  return {N.lo - M.hi(), N.hi() - M.lo};
}

}  // namespace hilbtan
