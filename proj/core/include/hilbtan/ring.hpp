#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "hilbtan/linalg.hpp"

namespace hilbtan {

using Exponents = std::vector<std::uint16_t>;

struct Monomial {
  Exponents exponents;

  int degree() const {
    int d = 0;
    for (auto e : exponents) d += e;
    return d;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Polynomial ring in n variables with monomial bases of each graded piece.
///
/// Monomials of degree d are listed in graded lexicographic order with
/// x1 > x2 > ... > xn, so x1^d has index 0 and xn^d is last. Basis tables are
/// built lazily and cached; lookups are thread-safe.
class RingCtx {
 public:
  explicit RingCtx(int n);

  int nvars() const { return n_; }

  /// binom(n+d-1, n-1); zero for negative d.
  std::size_t dim(int d) const;

  const std::vector<Exponents>& basis(int d) const;
  std::size_t index_of(const Exponents& e) const;

  /// Index in R_{d+1} of x_var times monomial idx of R_d.
  std::uint32_t times_var(int d, std::size_t idx, int var) const;
  /// Index in R_{a+b} of the product of monomial i of R_a and j of R_b.
  std::uint32_t product(int a, std::size_t i, int b, std::size_t j) const;

  std::string monomial_string(int d, std::size_t idx) const;

 private:
  struct Table {
    std::vector<Exponents> monomials;
    std::map<Exponents, std::uint32_t> index;
    std::vector<std::vector<std::uint32_t>> up;  // up[idx][var] into degree d+1
  };
  const Table& table(int d) const;

  int n_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<Table>> tables_;
};

using RingPtr = std::shared_ptr<const RingCtx>;

inline RingPtr make_ring(int n) { return std::make_shared<const RingCtx>(n); }

/// Field-independent homogeneous form with integer coefficients.
struct Form {
  int degree = 0;
  std::vector<std::pair<std::uint32_t, mpz_class>> terms;  // (monomial index in R_degree, coefficient)

  bool is_zero() const { return terms.empty(); }
};

/// Homogeneous element over a concrete field: a coordinate vector in R_d.
template <typename F>
struct HomogeneousElement {
  int degree = 0;
  Vec<F> coords;
};

template <typename F>
HomogeneousElement<F> to_element(const F& field, const RingCtx& ring, const Form& f) {
  HomogeneousElement<F> out{f.degree, Vec<F>(ring.dim(f.degree), field.zero())};
  for (const auto& [i, c] : f.terms) out.coords[i] = field.add(out.coords[i], field.from_mpz(c));
  return out;
}

template <typename F>
SparseRow<F> to_row(const F& field, const Form& f) {
  SparseRow<F> out;
  for (const auto& [i, c] : f.terms) {
    auto v = field.from_mpz(c);
    if (!field.is_zero(v)) out.emplace_back(i, v);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

/// Shifts a vector of R_d by the monomial m of degree a; result in R_{d+a}.
template <typename Row>
Row shift(const RingCtx& ring, const Row& v, int d, int a, std::size_t m) {
  Row out;
  out.reserve(v.size());
  for (const auto& [c, x] : v) out.emplace_back(ring.product(d, c, a, m), x);
  std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  return out;
}

template <typename Row>
Row times_var(const RingCtx& ring, const Row& v, int d, int var) {
  Row out;
  out.reserve(v.size());
  for (const auto& [c, x] : v) out.emplace_back(ring.times_var(d, c, var), x);
  std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  return out;
}

/// Partial derivative d/dx_var of a vector in R_d, landing in R_{d-1}.
template <typename F>
SparseRow<F> derivative(const F& field, const RingCtx& ring, const SparseRow<F>& v, int d, int var) {
  std::map<std::uint32_t, typename F::Elem> acc;
  if (d == 0) return {};
  for (const auto& [c, x] : v) {
    Exponents e = ring.basis(d)[c];
    if (e[static_cast<std::size_t>(var)] == 0) continue;
    auto coef = field.from_int(e[static_cast<std::size_t>(var)]);
    e[static_cast<std::size_t>(var)] -= 1;
    auto idx = static_cast<std::uint32_t>(ring.index_of(e));
    auto it = acc.find(idx);
    auto term = field.mul(coef, x);
    if (it == acc.end()) {
      acc.emplace(idx, term);
    } else {
      it->second = field.add(it->second, term);
    }
  }
  SparseRow<F> out;
  for (auto& [c, x] : acc) {
    if (!field.is_zero(x)) out.emplace_back(c, x);
  }
  return out;
}

/// Matrix of multiplication by f as a map R_d -> R_{d+deg f}.
template <typename F>
Matrix<F> mult_map(const F& field, const RingCtx& ring, const HomogeneousElement<F>& f, int d) {
  Matrix<F> m(field, ring.dim(d + f.degree), ring.dim(d));
  for (std::size_t col = 0; col < ring.dim(d); ++col) {
    for (std::size_t i = 0; i < f.coords.size(); ++i) {
      if (field.is_zero(f.coords[i])) continue;
      auto r = ring.product(f.degree, i, d, col);
      m.at(r, col) = field.add(m.at(r, col), f.coords[i]);
    }
  }
  return m;
}

/// The n maps x_j : R_d -> R_{d+1}.
template <typename F>
std::vector<Matrix<F>> variable_action_matrices(const F& field, const RingCtx& ring, int d) {
  std::vector<Matrix<F>> out;
  for (int j = 0; j < ring.nvars(); ++j) {
    Matrix<F> m(field, ring.dim(d + 1), ring.dim(d));
    for (std::size_t col = 0; col < ring.dim(d); ++col) m.at(ring.times_var(d, col, j), col) = field.one();
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace hilbtan
