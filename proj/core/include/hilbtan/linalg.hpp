#pragma once

// Exact matrices and elimination over PrimeField / RationalField.
//
// Everything here is deterministic: the echelon form of a list of rows depends
// only on the rows and their order, and the reduced echelon form and the kernel
// basis depend only on the row space.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hilbtan/field.hpp"

namespace hilbtan {

template <typename F>
using Vec = std::vector<typename F::Elem>;

/// Sparse row: (column, value) pairs sorted by column, no explicit zeros.
template <typename F>
using SparseRow = std::vector<std::pair<std::uint32_t, typename F::Elem>>;

template <typename F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix() = default;
  Matrix(const F& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix from_ints(const F& field, const std::vector<std::vector<std::int64_t>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = field.from_int(rows[i][j]);
    }
    return m;
  }

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Elem& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [&](const Elem& e) { return field_.is_zero(e); });
  }

  Vec<F> apply(std::span<const Elem> v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
    Vec<F> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!field_.is_zero(at(i, j)) && !field_.is_zero(v[j])) {
          out[i] = field_.add(out[i], field_.mul(at(i, j), v[j]));
        }
      }
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
    const F& f = a.field_;
    Matrix out(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Elem& x = a.at(i, k);
        if (f.is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!f.is_zero(b.at(k, j))) out.at(i, j) = f.add(out.at(i, j), f.mul(x, b.at(k, j)));
        }
      }
    }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum size mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference size mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  F field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

template <typename F>
SparseRow<F> to_sparse(const F& field, std::span<const typename F::Elem> v) {
  SparseRow<F> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!field.is_zero(v[i])) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  }
  return out;
}

template <typename F>
Vec<F> to_dense(const F& field, const SparseRow<F>& row, std::size_t n) {
  Vec<F> out(n, field.zero());
  for (const auto& [c, v] : row) out[c] = v;
  return out;
}

/// Incremental row echelon form over a fixed number of columns.
///
/// Rows are kept monic (leading coefficient one). Insertion reduces the new row
/// against the current pivots using a dense scratch accumulator; only the
/// columns touched by the row are visited.
template <typename F>
class Echelon {
 public:
  using Elem = typename F::Elem;

  Echelon(const F& field, std::size_t cols)
      : field_(field), cols_(cols), pivot_row_(cols, -1), acc_(cols, field.zero()), touched_(cols, 0) {}

  const F& field() const { return field_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t c) const { return pivot_row_[c] >= 0; }

  /// Inserts a row; returns true when it was independent of the previous ones.
  bool insert(const SparseRow<F>& row) {
    SparseRow<F> r = reduce(row);
    if (r.empty()) return false;
    Elem lead_inv = field_.inv(r.front().second);
    if (!field_.is_one(r.front().second)) {
      for (auto& e : r) e.second = field_.mul(e.second, lead_inv);
    }
    pivot_row_[r.front().first] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(r));
    reduced_ = false;
    return true;
  }

  bool insert_dense(std::span<const Elem> v) { return insert(to_sparse(field_, v)); }

  /// Remainder of row after eliminating every pivot column.
  SparseRow<F> reduce(const SparseRow<F>& row) {
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
    std::vector<std::uint32_t> seen;
    auto touch = [&](std::uint32_t c) {
      if (!touched_[c]) {
        touched_[c] = 1;
        seen.push_back(c);
        heap.push(c);
      }
    };
    for (const auto& [c, v] : row) {
      if (c >= cols_) throw std::out_of_range("row entry beyond column count");
      acc_[c] = field_.add(acc_[c], v);
      touch(c);
    }
    SparseRow<F> rest;
    while (!heap.empty()) {
      std::uint32_t c = heap.top();
      heap.pop();
      if (field_.is_zero(acc_[c])) continue;
      std::int32_t p = pivot_row_[c];
      if (p < 0) {
        rest.emplace_back(c, acc_[c]);
        continue;
      }
      Elem factor = acc_[c];
      for (const auto& [pc, pv] : rows_[static_cast<std::size_t>(p)]) {
        acc_[pc] = field_.sub(acc_[pc], field_.mul(factor, pv));
        touch(pc);
      }
    }
    for (std::uint32_t c : seen) {
      acc_[c] = field_.zero();
      touched_[c] = 0;
    }
    std::sort(rest.begin(), rest.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return rest;
  }

  bool in_span(const SparseRow<F>& row) { return reduce(row).empty(); }

  /// Back-substitutes so every pivot column is zero outside its own row.
  void make_reduced() {
    if (reduced_) return;
    std::vector<std::uint32_t> pivots = pivot_columns();
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      auto& r = rows_[static_cast<std::size_t>(pivot_row_[*it])];
      SparseRow<F> tail(r.begin() + 1, r.end());
      // Temporarily detach this pivot so reduce() only uses the other rows.
      std::int32_t saved = pivot_row_[*it];
      pivot_row_[*it] = -1;
      SparseRow<F> reduced_tail = reduce(tail);
      pivot_row_[*it] = saved;
      SparseRow<F> fresh;
      fresh.reserve(reduced_tail.size() + 1);
      fresh.push_back(r.front());
      fresh.insert(fresh.end(), reduced_tail.begin(), reduced_tail.end());
      r = std::move(fresh);
    }
    reduced_ = true;
  }

  std::vector<std::uint32_t> pivot_columns() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = 0; c < cols_; ++c) {
      if (pivot_row_[c] >= 0) out.push_back(c);
    }
    return out;
  }

  std::vector<std::uint32_t> free_columns() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = 0; c < cols_; ++c) {
      if (pivot_row_[c] < 0) out.push_back(c);
    }
    return out;
  }

  /// Reduced echelon rows ordered by pivot column.
  std::vector<SparseRow<F>> rref_rows() {
    make_reduced();
    std::vector<SparseRow<F>> out;
    for (std::uint32_t c : pivot_columns()) out.push_back(rows_[static_cast<std::size_t>(pivot_row_[c])]);
    return out;
  }

  /// Canonical basis of the right kernel: one vector per free column f, with
  /// entry one at f and zero at every other free column.
  std::vector<Vec<F>> kernel_basis() {
    make_reduced();
    std::vector<Vec<F>> out;
    std::vector<std::uint32_t> pivots = pivot_columns();
    for (std::uint32_t f : free_columns()) {
      Vec<F> v(cols_, field_.zero());
      v[f] = field_.one();
      for (std::uint32_t pc : pivots) {
        const auto& r = rows_[static_cast<std::size_t>(pivot_row_[pc])];
        auto hit = std::lower_bound(r.begin(), r.end(), f,
                                    [](const auto& e, std::uint32_t col) { return e.first < col; });
        if (hit != r.end() && hit->first == f) v[pc] = field_.neg(hit->second);
      }
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  F field_;
  std::size_t cols_;
  std::vector<std::int32_t> pivot_row_;
  std::vector<SparseRow<F>> rows_;
  std::vector<Elem> acc_;
  std::vector<char> touched_;
  bool reduced_ = true;
};

/// Scales a row to a canonical representative of its line: primitive integer
/// entries over Q, unchanged over F_p. Keeps coefficients small in iterated
/// kernel computations.
inline void make_primitive(const PrimeField&, SparseRow<PrimeField>&) {}

inline void make_primitive(const RationalField&, SparseRow<RationalField>& row) {
  if (row.empty()) return;
  mpz_class den = 1, num = 0;
  for (const auto& [c, x] : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  for (const auto& [c, x] : row) {
    mpz_class v = x.get_num() * (den / x.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
  }
  mpq_class scale(den, num);
  scale.canonicalize();
  for (auto& [c, x] : row) x *= scale;
}

namespace detail {

/// Fraction-free Bareiss elimination on an integer matrix; returns the rank.
inline std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  std::size_t rows = a.size();
  if (rows == 0) return 0;
  std::size_t cols = a.front().size();
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace detail

inline std::size_t rank(const Matrix<RationalField>& m) {
  std::vector<std::vector<mpz_class>> ints(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class den = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m.at(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpq_class scaled = m.at(i, j) * den;
      ints[i][j] = scaled.get_num();
    }
  }
  return detail::bareiss_rank(std::move(ints));
}

inline std::size_t rank(const Matrix<PrimeField>& m) {
  Echelon<PrimeField> e(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert_dense(m.row(i));
  return e.rank();
}

template <typename F>
std::vector<Vec<F>> kernel_basis(const Matrix<F>& m) {
  Echelon<F> e(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert_dense(m.row(i));
  return e.kernel_basis();
}

/// Particular solution of m x = b with free variables set to zero, or nullopt.
template <typename F>
std::optional<Vec<F>> solve(const Matrix<F>& m, std::span<const typename F::Elem> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length must equal row count");
  const F& f = m.field();
  const std::size_t n = m.cols();
  Echelon<F> e(f, n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseRow<F> r = to_sparse(f, m.row(i));
    if (!f.is_zero(b[i])) r.emplace_back(static_cast<std::uint32_t>(n), b[i]);
    e.insert(r);
  }
  if (e.is_pivot(n)) return std::nullopt;
  Vec<F> x(n, f.zero());
  for (const auto& r : e.rref_rows()) {
    if (r.back().first == n) x[r.front().first] = r.back().second;
  }
  return x;
}

/// A linear subspace of F^ambient stored by its reduced echelon basis.
template <typename F>
class Subspace {
 public:
  using Elem = typename F::Elem;

  Subspace() = default;
  Subspace(const F& field, std::size_t ambient) : field_(field), ambient_(ambient) { finish({}); }

  static Subspace span(const F& field, std::size_t ambient, const std::vector<SparseRow<F>>& gens) {
    Echelon<F> e(field, ambient);
    for (const auto& g : gens) e.insert(g);
    return from_echelon(e);
  }

  static Subspace from_echelon(Echelon<F>& e) {
    Subspace s;
    s.field_ = e.field();
    s.ambient_ = e.cols();
    s.finish(e.rref_rows());
    return s;
  }

  static Subspace full(const F& field, std::size_t ambient) {
    std::vector<SparseRow<F>> rows;
    for (std::size_t i = 0; i < ambient; ++i) rows.push_back({{static_cast<std::uint32_t>(i), field.one()}});
    Subspace s;
    s.field_ = field;
    s.ambient_ = ambient;
    s.finish(std::move(rows));
    return s;
  }

  const F& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  std::size_t codim() const { return ambient_ - rows_.size(); }
  bool is_full() const { return dim() == ambient_; }

  const std::vector<SparseRow<F>>& basis() const { return rows_; }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }
  /// Non-pivot columns; their unit vectors give a basis of the quotient.
  const std::vector<std::uint32_t>& free_columns() const { return free_; }
  /// Position of column c among the free columns, or -1 for a pivot column.
  std::int32_t free_index(std::uint32_t c) const { return free_index_[c]; }
  std::int32_t pivot_index(std::uint32_t c) const { return pivot_index_[c]; }

  /// Normal form of v modulo the subspace, expressed in quotient coordinates.
  Vec<F> quotient_coords(const SparseRow<F>& v) const {
    Vec<F> out(free_.size(), field_.zero());
    for (const auto& [c, x] : v) {
      if (free_index_[c] >= 0) {
        auto& o = out[static_cast<std::size_t>(free_index_[c])];
        o = field_.add(o, x);
      } else {
        for (const auto& [rc, rv] : rows_[static_cast<std::size_t>(pivot_index_[c])]) {
          if (rc == c) continue;
          auto& o = out[static_cast<std::size_t>(free_index_[rc])];
          o = field_.sub(o, field_.mul(x, rv));
        }
      }
    }
    return out;
  }

  /// Coordinates of v in the echelon basis; v must lie in the subspace.
  Vec<F> coords(const SparseRow<F>& v) const {
    Vec<F> out(rows_.size(), field_.zero());
    for (const auto& [c, x] : v) {
      if (pivot_index_[c] >= 0) out[static_cast<std::size_t>(pivot_index_[c])] = x;
    }
    return out;
  }

  bool contains(const SparseRow<F>& v) const {
    Vec<F> q = quotient_coords(v);
    return std::all_of(q.begin(), q.end(), [&](const Elem& e) { return field_.is_zero(e); });
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("subspaces live in different spaces");
    return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const auto& r) { return contains(r); });
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  void finish(std::vector<SparseRow<F>> rows) {
    rows_ = std::move(rows);
    pivots_.clear();
    free_.clear();
    pivot_index_.assign(ambient_, -1);
    free_index_.assign(ambient_, -1);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      pivots_.push_back(rows_[i].front().first);
      pivot_index_[rows_[i].front().first] = static_cast<std::int32_t>(i);
    }
    for (std::uint32_t c = 0; c < ambient_; ++c) {
      if (pivot_index_[c] < 0) {
        free_index_[c] = static_cast<std::int32_t>(free_.size());
        free_.push_back(c);
      }
    }
  }

  F field_{};
  std::size_t ambient_ = 0;
  std::vector<SparseRow<F>> rows_;
  std::vector<std::uint32_t> pivots_;
  std::vector<std::uint32_t> free_;
  std::vector<std::int32_t> pivot_index_;
  std::vector<std::int32_t> free_index_;
};

}  // namespace hilbtan
