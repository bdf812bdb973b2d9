#include "doctest.h"
#include "hilbtan/families.hpp"
#include "hilbtan/module.hpp"
#include "hilbtan/poly_io.hpp"

using namespace hilbtan;

namespace {

const RationalField QQ;
const PrimeField FP(32003);

using QIdeal = HomogeneousIdeal<RationalField>;

HilbertFunction hf(std::initializer_list<std::int64_t> v) { return HilbertFunction{v, false}; }

QIdeal from_text(int n, const std::string& gens) {
  auto ring = make_ring(n);
  auto forms = parse_polynomial_list(gens, *ring);
  return QIdeal::from_generators(QQ, ring, forms, 2, true);
}

}  // namespace

TEST_CASE("ideal from generators") {
  auto I = from_text(2, "x1, x2");
  CHECK(I.is_m_primary());
  CHECK(I.hilbert_function() == hf({1}));
  CHECK(I.dim(1) == 2);
  CHECK(I.dim(2) == 3);

  auto ring = make_ring(4);
  auto I2 = QIdeal::from_generators(QQ, ring, i2_generators(*ring), 4);
  CHECK(I2.hilbert_function() == hf({1, 4, 2}));
  CHECK(I2.is_closed_under_multiplication());

  auto delta = family_delta(QQ, ring, 6);
  CHECK_FALSE(delta.is_m_primary());
  auto h = delta.hilbert_function();
  CHECK(h.truncated);
  REQUIRE(h.values.size() == 7);
  for (int i = 1; i <= 6; ++i) CHECK(h.values[static_cast<std::size_t>(i)] == 4);
  CHECK_THROWS_AS(delta.piece(7), Error);
}

TEST_CASE("ideal construction errors") {
  auto ring = make_ring(3);
  auto gens = parse_polynomial_list("x1^2, x2^3", *ring);
  try {
    QIdeal::from_generators(QQ, ring, gens, 2);
    FAIL("expected CutoffTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CutoffTooSmall);
  }
  // (x1^2, x2^3) is not m-primary in three variables.
  try {
    QIdeal::from_generators(QQ, ring, gens, 3, true, 12);
    FAIL("expected CutoffTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CutoffTooSmall);
  }
  Form bad{2, {{99, mpz_class(1)}}};
  CHECK_THROWS_AS(QIdeal::from_generators(QQ, ring, {bad}, 3), Error);
}

TEST_CASE("powers of the maximal ideal") {
  auto ring = make_ring(3);
  CHECK(QIdeal::power_of_max(QQ, ring, 1).hilbert_function() == hf({1}));
  auto m2 = QIdeal::power_of_max(QQ, ring, 2);
  CHECK(m2.hilbert_function() == hf({1, 3}));
  CHECK(m2.colength() == 4);
  // 1 + 3 + 6 + 10 + 15
  CHECK(QIdeal::power_of_max(QQ, ring, 5).colength() == 35);
  auto r4 = make_ring(4);
  CHECK(QIdeal::power_of_max(QQ, r4, 4).hilbert_function() == hf({1, 4, 10, 20}));
}

TEST_CASE("hilbert function fixtures") {
  CHECK(from_text(4, "x1^2, x1*x2, x2^2, x3, x4").hilbert_function() == hf({1, 2}));

  auto ring = make_ring(4);
  auto Z = family_8points(QQ, ring);
  CHECK(Z.hilbert_function() == hf({1, 4, 3}));
  CHECK(Z.colength() == 8);
}

TEST_CASE("containment") {
  auto ring = make_ring(4);
  auto Z = family_8points(QQ, ring);
  auto S = QIdeal::from_generators(QQ, ring, twisted_cubic_cone_generators(*ring), 4);
  CHECK(Z.contains(S));
  CHECK_FALSE(S.contains(Z));
  CHECK(Z.contains(Z));
  for (const auto& g : S.generators()) CHECK(Z.contains_element(g));

  // Any ideal whose quotient has Hilbert function of length <= 5 contains m^5.
  auto r3 = make_ring(3);
  auto G = generic_ideal_with_hilbert_function(QQ, r3, hf({1, 3, 6, 8, 4}), 11);
  CHECK(G.ideal.contains(QIdeal::power_of_max(QQ, r3, 5)));
  CHECK(G.ideal.contains_element(parse_polynomial("x1^5 + 7*x2^2*x3^3 - x3^5", *r3)));
  CHECK_FALSE(G.ideal.contains(QIdeal::power_of_max(QQ, r3, 4)));

  // Non m-primary ideal compared past its cutoff.
  auto delta = family_delta(QQ, ring, 3);
  CHECK_THROWS_AS(delta.contains(QIdeal::power_of_max(QQ, ring, 5)), Error);
}

TEST_CASE("quotient and subquotient modules") {
  auto ring = make_ring(3);
  auto R = QIdeal::unit(QQ, ring);
  auto m = QIdeal::power_of_max(QQ, ring, 1);
  auto k = subquotient_module(R, m);
  CHECK(k.lo == 0);
  CHECK(k.dims == std::vector<std::size_t>{1});
  CHECK(k.actions.empty());

  auto r4 = make_ring(4);
  auto I2 = QIdeal::from_generators(QQ, r4, sharpness_example_generators(*r4), 5, true);
  CHECK(I2.hilbert_function() == hf({1, 4, 10, 3, 2}));
  auto m3 = QIdeal::power_of_max(QQ, r4, 3);
  auto lower = subquotient_module(m3, I2);
  CHECK(lower.lo == 3);
  CHECK(lower.dims == std::vector<std::size_t>{3, 2});
  CHECK(lower.actions_commute());

  auto m2 = QIdeal::power_of_max(QQ, r4, 2);
  auto upper = subquotient_module(m2, m3);
  CHECK(upper.lo == 2);
  CHECK(upper.dims == std::vector<std::size_t>{10});

  CHECK_THROWS_AS(subquotient_module(m3, m2), Error);

  auto q = quotient_module(I2);
  CHECK(q.dims == std::vector<std::size_t>{1, 4, 10, 3, 2});
  CHECK(q.actions_commute());
}

TEST_CASE("generic ideals with prescribed Hilbert function") {
  auto r4 = make_ring(4);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto G = generic_ideal_with_hilbert_function(QQ, r4, hf({1, 4, 2}), seed);
    CHECK(G.ideal.hilbert_function() == hf({1, 4, 2}));
    CHECK(G.ideal.order() == 2);
    CHECK(G.ideal.contains(QIdeal::power_of_max(QQ, r4, 3)));
    // Rebuilding from the integer generators gives the same ideal.
    auto again = QIdeal::from_generators(QQ, r4, G.generators, 3, true);
    CHECK(again.equals(G.ideal));
  }

  auto r3 = make_ring(3);
  auto T = generic_ideal_with_hilbert_function(QQ, r3, hf({1, 3, 6, 8, 4}), 5);
  CHECK(T.ideal.hilbert_function() == hf({1, 3, 6, 8, 4}));
  CHECK(T.ideal.order() == 3);
  CHECK(T.ideal.is_closed_under_multiplication());

  auto M = generic_ideal_with_hilbert_function(QQ, r3, hf({1}), 99);
  CHECK(M.ideal.equals(QIdeal::power_of_max(QQ, r3, 1)));

  // Deterministic in the seed.
  auto a = generic_ideal_with_hilbert_function(FP, r3, hf({1, 3, 6, 8, 4}), 5);
  auto b = generic_ideal_with_hilbert_function(FP, r3, hf({1, 3, 6, 8, 4}), 5);
  REQUIRE(a.generators.size() == b.generators.size());
  for (std::size_t i = 0; i < a.generators.size(); ++i) CHECK(a.generators[i].terms == b.generators[i].terms);

  try {
    generic_ideal_with_hilbert_function(QQ, r3, hf({1, 1, 3}), 1);
    FAIL("expected Infeasible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Infeasible);
  }
}

TEST_CASE("family invariants") {
  for (int n = 4; n <= 9; ++n) {
    auto ring = make_ring(n);
    auto I2 = family_I2(FP, ring);
    CHECK(I2.hilbert_function() == hf({1, n, 2}));
    CHECK(I2.min_generator_count(2) == ring->dim(2) - 2);
    auto delta = family_delta(FP, ring, 4);
    for (int i = 1; i <= 4; ++i) CHECK(delta.quotient_dim(i) == static_cast<std::size_t>(n));
    for (int s = 2; s <= n - 2; ++s) {
      auto I1 = family_I1(FP, ring, s);
      CHECK(I1.hilbert_function() == hf({1, s}));
      CHECK(I1.contains(I2));
    }
  }
  auto r4 = make_ring(4);
  CHECK(family_I2(QQ, r4).min_generator_count(2) == 8);
  CHECK(delta_generators(*r4).size() == 6);
  CHECK(j_generators(*r4).size() == 2);
}

TEST_CASE("prime field and rational Hilbert functions agree on integer data") {
  auto r4 = make_ring(4);
  auto G = generic_ideal_with_hilbert_function(FP, r4, hf({1, 4, 10, 18, 10}), 3);
  auto Q = QIdeal::from_generators(QQ, r4, G.generators, 5, true);
  CHECK(Q.hilbert_function() == G.ideal.hilbert_function());
  CHECK(family_8points(FP, r4).hilbert_function() == family_8points(QQ, r4).hilbert_function());
}
