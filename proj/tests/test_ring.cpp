#include "doctest.h"
#include "hilbtan/ring.hpp"

using namespace hilbtan;

namespace {
const RationalField QQ;
}

TEST_CASE("graded piece dimensions") {
  RingCtx r3(3), r2(2);
  CHECK(r3.dim(0) == 1);
  CHECK(r3.dim(4) == 15);
  CHECK(r2.dim(3) == 4);
  CHECK(r3.dim(-1) == 0);
}

TEST_CASE("hilbert series of R matches 1/(1-t)^n") {
  for (int n = 1; n <= 6; ++n) {
    RingCtx r(n);
    // Coefficients of 1/(1-t)^n via repeated prefix sums of (1,1,1,...).
    std::vector<std::uint64_t> c(12, 1);
    for (int k = 1; k < n; ++k) {
      for (std::size_t i = 1; i < c.size(); ++i) c[i] += c[i - 1];
    }
    for (int d = 0; d < 12; ++d) {
      CHECK(r.dim(d) == c[static_cast<std::size_t>(d)]);
      CHECK(r.basis(d).size() == r.dim(d));
    }
  }
}

TEST_CASE("graded lex order puts x1^d first") {
  RingCtx r(3);
  CHECK(r.monomial_string(2, 0) == "x1^2");
  CHECK(r.monomial_string(2, 1) == "x1*x2");
  CHECK(r.monomial_string(2, 5) == "x3^2");
  CHECK(r.index_of({0, 0, 2}) == 5);
}

TEST_CASE("multiplication maps") {
  auto ring = make_ring(2);
  HomogeneousElement<RationalField> x1{1, {mpq_class(1), mpq_class(0)}};
  auto m = mult_map(QQ, *ring, x1, 1);
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 2);
  CHECK(rank(m) == 2);

  HomogeneousElement<RationalField> zero{1, {mpq_class(0), mpq_class(0)}};
  CHECK(mult_map(QQ, *ring, zero, 2).is_zero());

  // x1*x2 - x2*x1 collapses to the zero form before building the map.
  Form f{2, {{1, mpz_class(1)}, {1, mpz_class(-1)}}};
  CHECK(mult_map(QQ, *ring, to_element(QQ, *ring, f), 1).is_zero());
}

TEST_CASE("variable actions commute and are additive") {
  auto one = variable_action_matrices(QQ, RingCtx(1), 5);
  REQUIRE(one.size() == 1);
  CHECK(one[0].rows() == 1);
  CHECK(one[0].at(0, 0) == 1);

  auto two = variable_action_matrices(QQ, RingCtx(2), 0);
  REQUIRE(two.size() == 2);
  CHECK(two[0].at(0, 0) == 1);
  CHECK(two[1].at(1, 0) == 1);

  RingCtx r(3);
  for (int d = 0; d <= 3; ++d) {
    auto a = variable_action_matrices(QQ, r, d);
    auto b = variable_action_matrices(QQ, r, d + 1);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) CHECK(b[i] * a[j] == b[j] * a[i]);
    }
  }

  auto ring = make_ring(3);
  HomogeneousElement<RationalField> f{1, {mpq_class(1), mpq_class(2), mpq_class(0)}};
  HomogeneousElement<RationalField> g{1, {mpq_class(0), mpq_class(-1), mpq_class(3)}};
  HomogeneousElement<RationalField> fg{1, {mpq_class(1), mpq_class(1), mpq_class(3)}};
  CHECK(mult_map(QQ, *ring, f, 2) + mult_map(QQ, *ring, g, 2) == mult_map(QQ, *ring, fg, 2));
}
