#include "doctest.h"
#include "hilbtan/families.hpp"
#include "hilbtan/module.hpp"
#include "hilbtan/resolutions.hpp"

using namespace hilbtan;

namespace {

const RationalField QQ;
const PrimeField FP(32003);

HilbertFunction hf(std::initializer_list<std::int64_t> v) { return HilbertFunction{v, false}; }

// Generator count in degree d from ranks of dense multiplication matrices:
// rank of [x_j * (basis of I_{d-1})] against dim I_d.
template <typename F>
std::size_t oracle_generator_count(const HomogeneousIdeal<F>& I, int d) {
  const auto& ring = *I.ring();
  const F& field = I.field();
  if (d == 0) return I.dim(0);
  std::vector<Vec<F>> shifted;
  for (const auto& row : I.piece(d - 1).basis()) {
    HomogeneousElement<F> f{d - 1, to_dense(field, row, ring.dim(d - 1))};
    for (int j = 0; j < ring.nvars(); ++j) {
      Exponents e(static_cast<std::size_t>(ring.nvars()), 0);
      e[static_cast<std::size_t>(j)] = 1;
      HomogeneousElement<F> xj{1, Vec<F>(ring.dim(1), field.zero())};
      xj.coords[ring.index_of(e)] = field.one();
      auto M = mult_map(field, ring, xj, d - 1);
      shifted.push_back(M.apply(f.coords));
    }
  }
  Matrix<F> S(field, shifted.size(), ring.dim(d));
  for (std::size_t r = 0; r < shifted.size(); ++r) {
    for (std::size_t c = 0; c < ring.dim(d); ++c) S.at(r, c) = shifted[r][c];
  }
  return I.dim(d) - rank(S);
}

template <typename F>
void check_resolution_invariants(const HomogeneousIdeal<F>& I) {
  auto rep = minimal_resolution(I);
  CHECK(rep.euler_identity);
  CHECK(rep.betti.projective_dimension() == I.ring()->nvars() - 1);
  for (const auto& [k, v] : rep.betti.entries) CHECK(k.second <= I.socle_degree() + k.first + 1);
  auto mg = minimal_generators(I);
  for (int d = 0; d <= I.socle_degree() + 1; ++d) CHECK(mg.count(d) == rep.betti.at(0, d));
}

// beta_{i,j}(R/I) as the dimension of Koszul homology H_i(x; R/I)_j, using only
// the multiplication maps of R/I.
template <typename F>
std::size_t koszul_betti(const HomogeneousIdeal<F>& I, int i, int j) {
  const F& field = I.field();
  const int n = I.ring()->nvars();
  auto Q = quotient_module(I);
  auto subsets = [n](int k) {
    std::vector<unsigned> out;
    for (unsigned m = 0; m < (1u << n); ++m) {
      if (__builtin_popcount(m) == k) out.push_back(m);
    }
    return out;
  };
  auto qdim = [&](int d) -> std::size_t { return d < Q.lo || d > Q.hi() ? 0 : Q.dim(d); };
  // d_k : Lambda^k (x) Q_{j-k} -> Lambda^{k-1} (x) Q_{j-k+1}
  auto diff_rank = [&](int k) -> std::size_t {
    if (k <= 0 || k > n) return 0;
    auto src = subsets(k), dst = subsets(k - 1);
    std::size_t sd = qdim(j - k), td = qdim(j - k + 1);
    if (sd == 0 || td == 0) return 0;
    Matrix<F> M(field, dst.size() * td, src.size() * sd);
    for (std::size_t a = 0; a < src.size(); ++a) {
      int sign = 1;
      for (int t = 0; t < n; ++t) {
        if (!(src[a] >> t & 1u)) continue;
        unsigned rest = src[a] & ~(1u << t);
        std::size_t b = static_cast<std::size_t>(std::find(dst.begin(), dst.end(), rest) - dst.begin());
        const auto* act = Q.action(j - k, t);
        for (std::size_t r = 0; r < td; ++r) {
          for (std::size_t c = 0; c < sd; ++c) {
            auto v = act->at(r, c);
            M.at(b * td + r, a * sd + c) = sign > 0 ? v : field.neg(v);
          }
        }
        sign = -sign;
      }
    }
    return rank(M);
  };
  std::size_t chain = subsets(i).size() * qdim(j - i);
  return chain - diff_rank(i) - diff_rank(i + 1);
}

template <typename F>
void check_against_koszul(const HomogeneousIdeal<F>& I) {
  auto b = betti_table(I);
  const int n = I.ring()->nvars();
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= I.socle_degree() + n + 1; ++j) CHECK(koszul_betti(I, i, j) == b.at(i - 1, j));
  }
}

}  // namespace

TEST_CASE("minimal generators") {
  auto r3 = make_ring(3);
  auto m2 = HomogeneousIdeal<RationalField>::power_of_max(QQ, r3, 2);
  auto g = minimal_generators(m2);
  CHECK(g.generators.size() == 6);
  CHECK(g.count(2) == 6);

  auto r4 = make_ring(4);
  CHECK(minimal_generators(family_I2(QQ, r4)).degrees() == std::vector<int>(8, 2));

  auto T = generic_ideal_with_hilbert_function(QQ, r3, hf({1, 3, 6, 8, 4}), 5).ideal;
  auto mg = minimal_generators(T);
  CHECK(mg.count(3) == 2);
  for (int d = 0; d <= 6; ++d) CHECK(mg.count(d) == oracle_generator_count(T, d));
  CHECK(mg.count(6) == 0);
}

TEST_CASE("Koszul complexes") {
  for (int n = 2; n <= 4; ++n) {
    auto ring = make_ring(n);
    auto m = HomogeneousIdeal<RationalField>::power_of_max(QQ, ring, 1);
    auto b = betti_table(m);
    for (int i = 0; i < n; ++i) {
      CHECK(b.at(i, i + 1) == binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(i + 1)));
    }
    CHECK(b.projective_dimension() == n - 1);
    CHECK(b.euler_identity_holds(m.hilbert_function()));
  }
}

TEST_CASE("power of the maximal ideal in two variables") {
  auto ring = make_ring(2);
  auto b = betti_table(HomogeneousIdeal<RationalField>::power_of_max(QQ, ring, 2));
  CHECK(b.entries.size() == 2);
  CHECK(b.at(0, 2) == 3);
  CHECK(b.at(1, 3) == 2);
}

TEST_CASE("Betti table of Delta_4 + J_4") {
  auto r4 = make_ring(4);
  for (int pass = 0; pass < 2; ++pass) {
    BettiTable b = pass == 0 ? betti_table(family_I2(QQ, r4)) : betti_table(family_I2(FP, r4));
    std::map<std::pair<int, int>, std::size_t> expected{{{0, 2}, 8}, {{1, 3}, 12}, {{1, 4}, 1},
                                                       {{2, 4}, 4}, {{2, 5}, 4},  {{3, 6}, 2}};
    CHECK(b.entries == expected);
    CHECK(b.to_json() == R"({"0,2":8,"1,3":12,"1,4":1,"2,4":4,"2,5":4,"3,6":2})");
    CHECK(b.to_text() ==
          "       0  1 2 3\n"
          "total: 8 13 8 2\n"
          "    2: 8 12 4 .\n"
          "    3: .  1 4 2\n");
  }
}

TEST_CASE("resolution invariants on fixtures") {
  auto r3 = make_ring(3);
  auto r4 = make_ring(4);
  check_resolution_invariants(family_I2(QQ, r4));
  check_resolution_invariants(family_8points(QQ, r4));
  check_resolution_invariants(family_I1(QQ, r4, 2));
  check_resolution_invariants(HomogeneousIdeal<RationalField>::power_of_max(QQ, r3, 3));
  check_resolution_invariants(generic_ideal_with_hilbert_function(QQ, r3, hf({1, 3, 6, 8, 4}), 5).ideal);
  check_resolution_invariants(generic_ideal_with_hilbert_function(FP, r4, hf({1, 4, 3}), 2).ideal);
  auto r5 = make_ring(5);
  check_resolution_invariants(family_I2(FP, r5));
}

TEST_CASE("Betti numbers agree with Koszul homology") {
  auto r3 = make_ring(3);
  auto r4 = make_ring(4);
  check_against_koszul(family_I2(QQ, r4));
  check_against_koszul(family_8points(FP, r4));
  check_against_koszul(generic_ideal_with_hilbert_function(QQ, r3, hf({1, 3, 6, 8, 4}), 5).ideal);
  check_against_koszul(generic_ideal_with_hilbert_function(FP, r4, hf({1, 4, 6, 2}), 9).ideal);
}

TEST_CASE("linear syzygies predicate") {
  auto r3 = make_ring(3);
  auto r4 = make_ring(4);
  CHECK_FALSE(has_linear_syzygies(generic_ideal_with_hilbert_function(QQ, r3, hf({1, 3, 6, 8, 4}), 5).ideal));
  CHECK(has_linear_syzygies(generic_ideal_with_hilbert_function(QQ, r4, hf({1, 4, 2}), 5).ideal));
  for (int k = 1; k <= 3; ++k) CHECK(has_linear_syzygies(HomogeneousIdeal<RationalField>::power_of_max(QQ, r3, k)));
  auto not2 = generic_ideal_with_hilbert_function(QQ, r3, hf({1, 2, 2, 2}), 5).ideal;
  try {
    has_linear_syzygies(not2);
    FAIL("expected NotTwoStep");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTwoStep);
  }
}
