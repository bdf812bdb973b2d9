#pragma once

// Named ideals: the determinantal family Delta_n, its companion J_n, the
// nestings built from them, and the explicit four-variable examples.

#include <cstdint>
#include <random>
#include <vector>

#include "hilbtan/ideal.hpp"

namespace hilbtan {

/// 2x2 minors of [[x1 .. xn], [xn, x1 .. x_{n-1}]], columns (a, b) in lex order.
std::vector<Form> delta_generators(const RingCtx& ring);
/// x_n * (x_i + x_{n-1}) for i = 1 .. n-2.
std::vector<Form> j_generators(const RingCtx& ring);
/// Delta_n + J_n.
std::vector<Form> i2_generators(const RingCtx& ring);
/// (x1 .. xs)^2 + (x_{s+1} .. xn).
std::vector<Form> i1_generators(const RingCtx& ring, int s);
/// (x1, x3)^2 + (x2, x4)^2 + (x1 x4 - x3 x2) in four variables.
std::vector<Form> eight_points_generators(const RingCtx& ring);
/// 2x2 minors of [[x1, x2, x3], [x2, x3, x4]]: the cone over the twisted cubic.
std::vector<Form> twisted_cubic_cone_generators(const RingCtx& ring);
/// x4 m^2 + (x1 x3, x2 x3, x2^2) m + (x1^4, x3^5) in four variables.
std::vector<Form> sharpness_example_generators(const RingCtx& ring);
/// All monomials of degree k.
std::vector<Form> max_power_generators(const RingCtx& ring, int k);

/// Degree-d monomial with coefficient one, from its exponent vector.
Form monomial_form(const RingCtx& ring, const Exponents& e);

template <typename F>
HomogeneousIdeal<F> family_delta(const F& field, RingPtr ring, int cutoff) {
  auto g = delta_generators(*ring);
  return HomogeneousIdeal<F>::from_generators(field, std::move(ring), std::move(g), cutoff);
}

template <typename F>
HomogeneousIdeal<F> family_J(const F& field, RingPtr ring, int cutoff) {
  auto g = j_generators(*ring);
  return HomogeneousIdeal<F>::from_generators(field, std::move(ring), std::move(g), cutoff);
}

template <typename F>
HomogeneousIdeal<F> family_I2(const F& field, RingPtr ring) {
  auto g = i2_generators(*ring);
  return HomogeneousIdeal<F>::from_generators(field, std::move(ring), std::move(g), 3, true);
}

template <typename F>
HomogeneousIdeal<F> family_I1(const F& field, RingPtr ring, int s) {
  auto g = i1_generators(*ring, s);
  return HomogeneousIdeal<F>::from_generators(field, std::move(ring), std::move(g), 2, true);
}

template <typename F>
HomogeneousIdeal<F> family_8points(const F& field, RingPtr ring) {
  auto g = eight_points_generators(*ring);
  return HomogeneousIdeal<F>::from_generators(field, std::move(ring), std::move(g), 3, true);
}

/// Result of the seeded random construction: integer generators plus the ideal.
template <typename F>
struct GenericIdeal {
  std::vector<Form> generators;
  HomogeneousIdeal<F> ideal;
  std::uint64_t seed_used = 0;
};

struct GenericOptions {
  int coefficient_bound = 5;  // entries drawn uniformly from [-bound, bound]
  int max_attempts = 8;
};

/// Random homogeneous ideal with Hilbert function q.
///
/// Degree by degree, I_d = R_1 I_{d-1} plus random forms until codim I_d = q(d).
/// The draws depend only on (seed, q); the field only decides which draws are
/// independent. Values computed at such a point are candidate generic values:
/// over Q, kernel dimensions there bound the generic ones from above.
template <typename F>
GenericIdeal<F> generic_ideal_with_hilbert_function(const F& field, RingPtr ring, const HilbertFunction& q,
                                                    std::uint64_t seed, GenericOptions opts = {}) {
  if (q.values.empty() || q.values.front() != 1) {
    throw Error(ErrorKind::Infeasible, "Hilbert function must start with 1");
  }
  const int top = q.length();  // I_top = R_top
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    std::uint64_t s = seed + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ull;
    std::mt19937_64 rng(s);
    std::vector<Form> gens;
    std::vector<Subspace<F>> pieces;
    bool ok = true;
    for (int d = 0; d <= top && ok; ++d) {
      std::size_t want = ring->dim(d) - static_cast<std::size_t>(std::max<std::int64_t>(0, q.at(d)));
      if (q.at(d) > static_cast<std::int64_t>(ring->dim(d))) {
        throw Error(ErrorKind::Infeasible, "q(" + std::to_string(d) + ") exceeds dim R_d");
      }
      Echelon<F> e(field, ring->dim(d));
      if (d > 0) {
        for (const auto& row : pieces.back().basis()) {
          for (int j = 0; j < ring->nvars(); ++j) e.insert(times_var(*ring, row, d - 1, j));
        }
      }
      if (e.rank() > want) {
        ok = false;
        break;
      }
      int stalls = 0;
      while (e.rank() < want) {
        Form f{d, {}};
        for (std::uint32_t i = 0; i < ring->dim(d); ++i) {
          auto v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * opts.coefficient_bound + 1)) -
                   opts.coefficient_bound;
          if (v != 0) f.terms.emplace_back(i, mpz_class(static_cast<long>(v)));
        }
        if (e.insert(to_row(field, f))) {
          gens.push_back(std::move(f));
          stalls = 0;
        } else if (++stalls > 64) {
          ok = false;
          break;
        }
      }
      pieces.push_back(Subspace<F>::from_echelon(e));
    }
    if (!ok) continue;
    auto I = HomogeneousIdeal<F>::from_pieces(field, ring, std::move(pieces), gens);
    return {std::move(gens), std::move(I), s};
  }
  throw Error(ErrorKind::Infeasible, "no ideal with Hilbert function " + q.to_string() + " after " +
                                         std::to_string(opts.max_attempts) + " attempts");
}

}  // namespace hilbtan
