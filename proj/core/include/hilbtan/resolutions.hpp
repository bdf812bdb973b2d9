#pragma once

// Minimal generators, syzygies and minimal free resolutions of m-primary
// ideals, degree by degree. Free modules are sums of shifted copies of R; a
// graded piece is the concatenation of the pieces R_{d - shift}.

#include <map>
#include <string>
#include <vector>

#include "hilbtan/ideal.hpp"

namespace hilbtan {

/// Graded free module sum_i R(-degrees[i]).
struct FreeModule {
  std::vector<int> degrees;

  std::size_t rank() const { return degrees.size(); }
  /// Offset of summand i inside the degree-d piece.
  std::vector<std::size_t> offsets(const RingCtx& ring, int d) const {
    std::vector<std::size_t> out;
    std::size_t acc = 0;
    for (int a : degrees) {
      out.push_back(acc);
      acc += d - a >= 0 ? ring.dim(d - a) : 0;
    }
    out.push_back(acc);
    return out;
  }
  std::size_t dim(const RingCtx& ring, int d) const { return offsets(ring, d).back(); }
};

/// A homogeneous element of a free module: coordinates in its degree-d piece.
template <typename F>
struct FreeElement {
  int degree = 0;
  SparseRow<F> coords;
};

template <typename F>
struct MinimalGenerators {
  std::vector<HomogeneousElement<F>> generators;  // sorted by degree

  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& g : generators) out.push_back(g.degree);
    return out;
  }
  std::size_t count(int d) const {
    std::size_t c = 0;
    for (const auto& g : generators) c += g.degree == d;
    return c;
  }
};

/// Betti numbers beta_{i,j} of an ideal I (so beta_{i,j}(R/I) = beta_{i-1,j}(I)).
struct BettiTable {
  std::map<std::pair<int, int>, std::size_t> entries;
  int nvars = 0;

  std::size_t at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  /// Projective dimension of I.
  int projective_dimension() const;
  std::size_t total(int i) const;
  /// Macaulay2-style staircase: column i, row j - i.
  std::string to_text() const;
  /// {"i,j": count}
  std::string to_json() const;
  /// sum_{i,j} (-1)^i beta_{i,j}(R/I) t^j == h_{R/I}(t) (1-t)^n.
  bool euler_identity_holds(const HilbertFunction& h) const;
};

template <typename F>
MinimalGenerators<F> minimal_generators(const HomogeneousIdeal<F>& I) {
  if (!I.is_m_primary()) throw Error(ErrorKind::NotMPrimary, "minimal generators need an m-primary ideal");
  const F& field = I.field();
  MinimalGenerators<F> out;
  for (int d = std::max(I.order(), 0); d <= I.socle_degree() + 1; ++d) {
    auto base = I.linear_shift_span(d - 1);
    Echelon<F> e(field, I.ring()->dim(d));
    for (const auto& row : base.basis()) e.insert(row);
    // Prefer the given integer generators: their coefficients stay small.
    std::vector<SparseRow<F>> candidates;
    for (const auto& g : I.generators()) {
      if (g.degree == d) candidates.push_back(to_row(field, g));
    }
    for (const auto& row : I.piece(d).basis()) candidates.push_back(row);
    for (auto& row : candidates) {
      make_primitive(field, row);
      if (e.insert(row)) out.generators.push_back({d, to_dense(field, row, I.ring()->dim(d))});
    }
  }
  return out;
}

namespace detail {

/// Image of (monomial m of degree a) * v, v in the degree-dv piece of G.
template <typename Row>
Row shift_free(const RingCtx& ring, const FreeModule& G, const std::vector<std::size_t>& from,
               const std::vector<std::size_t>& to, const Row& v, int dv, int a, std::size_t m) {
  Row out;
  out.reserve(v.size());
  std::size_t block = 0;
  for (const auto& [c, x] : v) {
    while (c >= from[block + 1]) ++block;
    int local_deg = dv - G.degrees[block];
    std::size_t local = ring.product(local_deg, c - from[block], a, m);
    out.emplace_back(static_cast<std::uint32_t>(to[block] + local), x);
  }
  std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  return out;
}

/// Kernel of sum_i R(-deg g_i) -> G, e_i -> g_i, in degree d.
template <typename F>
std::vector<SparseRow<F>> kernel_in_degree(const F& field, const RingCtx& ring, const FreeModule& G,
                                           const std::vector<FreeElement<F>>& gens, const FreeModule& src, int d) {
  auto src_off = src.offsets(ring, d);
  std::size_t ncols = src_off.back();
  if (ncols == 0) return {};
  std::size_t nrows = G.dim(ring, d);
  std::vector<SparseRow<F>> rows(nrows);
  auto to = G.offsets(ring, d);
  std::map<int, std::vector<std::size_t>> from;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int a = d - gens[i].degree;
    if (a < 0) continue;
    auto it = from.find(gens[i].degree);
    if (it == from.end()) it = from.emplace(gens[i].degree, G.offsets(ring, gens[i].degree)).first;
    for (std::size_t m = 0; m < ring.dim(a); ++m) {
      auto col = static_cast<std::uint32_t>(src_off[i] + m);
      for (const auto& [t, x] : shift_free(ring, G, it->second, to, gens[i].coords, gens[i].degree, a, m)) {
        rows[t].emplace_back(col, x);
      }
    }
  }
  Echelon<F> e(field, ncols);
  for (const auto& r : rows) {
    if (!r.empty()) e.insert(r);
  }
  std::vector<SparseRow<F>> out;
  for (auto& v : e.kernel_basis()) {
    out.push_back(to_sparse(field, std::span<const typename F::Elem>(v)));
    make_primitive(field, out.back());
  }
  return out;
}

/// Minimal generators of the kernel of the map given by gens, in degrees <= top.
template <typename F>
std::vector<FreeElement<F>> syzygy_generators(const F& field, const RingCtx& ring, const FreeModule& G,
                                              const std::vector<FreeElement<F>>& gens, int top) {
  FreeModule src;
  for (const auto& g : gens) src.degrees.push_back(g.degree);
  std::vector<FreeElement<F>> out;
  if (gens.empty()) return out;
  int lo = *std::min_element(src.degrees.begin(), src.degrees.end());
  std::vector<SparseRow<F>> prev;
  for (int d = lo; d <= top; ++d) {
    auto K = kernel_in_degree(field, ring, G, gens, src, d);
    auto to = src.offsets(ring, d);
    auto from = src.offsets(ring, d - 1);
    Echelon<F> e(field, to.back());
    for (const auto& v : prev) {
      for (int j = 0; j < ring.nvars(); ++j) e.insert(shift_free(ring, src, from, to, v, d - 1, 1, static_cast<std::size_t>(j)));
    }
    for (const auto& v : K) {
      if (e.insert(v)) out.push_back({d, v});
    }
    prev = std::move(K);
  }
  return out;
}

}  // namespace detail

/// Betti table plus the exact check of its alternating sum against the
/// Hilbert series, which fails if the degree cutoff dropped a generator.
struct ResolutionReport {
  BettiTable betti;
  bool euler_identity = false;
};

template <typename F>
ResolutionReport minimal_resolution(const HomogeneousIdeal<F>& I) {
  const F& field = I.field();
  const RingCtx& ring = *I.ring();
  const int s = I.socle_degree();
  ResolutionReport rep;
  rep.betti.nvars = ring.nvars();

  FreeModule G{{0}};  // R itself
  std::vector<FreeElement<F>> gens;
  for (auto& g : minimal_generators(I).generators) {
    gens.push_back({g.degree, to_sparse(field, std::span<const typename F::Elem>(g.coords))});
  }
  for (int i = 0; !gens.empty(); ++i) {
    for (const auto& g : gens) ++rep.betti.entries[{i, g.degree}];
    FreeModule next;
    for (const auto& g : gens) next.degrees.push_back(g.degree);
    auto syz = detail::syzygy_generators(field, ring, G, gens, s + i + 2);
    G = std::move(next);
    gens = std::move(syz);
  }
  rep.euler_identity = rep.betti.euler_identity_holds(I.hilbert_function());
  return rep;
}

template <typename F>
BettiTable betti_table(const HomogeneousIdeal<F>& I) {
  if (!I.is_m_primary()) throw Error(ErrorKind::NotMPrimary, "Betti tables need an m-primary ideal");
  return minimal_resolution(I).betti;
}

/// For I with m^{k+2} in I in m^k and I not in m^{k+1}: true unless
/// dim I_{k+1} - n dim I_k >= 0.
template <typename F>
bool has_linear_syzygies(const HomogeneousIdeal<F>& I) {
  if (!I.is_m_primary() || I.socle_degree() > I.order() + 1) {
    throw Error(ErrorKind::NotTwoStep, "ideal is not 2-step");
  }
  const int k = I.order();
  auto lhs = static_cast<std::int64_t>(I.dim(k + 1));
  auto rhs = static_cast<std::int64_t>(I.ring()->nvars()) * static_cast<std::int64_t>(I.dim(k));
  return lhs - rhs < 0;
}

}  // namespace hilbtan
