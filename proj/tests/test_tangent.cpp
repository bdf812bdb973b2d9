#include "doctest.h"
#include "hilbtan/families.hpp"
#include "hilbtan/resolutions.hpp"
#include "hilbtan/tangent.hpp"
#include "hom_oracle.hpp"

using namespace hilbtan;

namespace {

const RationalField QQ;
const PrimeField FP(32003);

using QIdeal = HomogeneousIdeal<RationalField>;
using PIdeal = HomogeneousIdeal<PrimeField>;

HilbertFunction hf(std::initializer_list<std::int64_t> v) { return HilbertFunction{v, false}; }

template <typename F>
void check_oracle(const std::vector<HomogeneousIdeal<F>>& ideals) {
  Nesting<F> nest(ideals);
  auto [lo, hi] = nest.degree_window();
  for (int e = lo - 1; e <= hi + 1; ++e) {
    CAPTURE(e);
    CHECK(nested_tangent_graded(nest, e).dim == oracle::nested_hom_dim(ideals, e));
  }
}

}  // namespace

TEST_CASE("graded hom examples") {
  auto r2 = make_ring(2);
  auto R = QIdeal::unit(QQ, r2);
  auto m = QIdeal::power_of_max(QQ, r2, 1);
  auto k = subquotient_module(R, m);
  CHECK(graded_hom(k, k, 0).dim == 1);
  CHECK(graded_hom(k, k, 1).dim == 0);

  // Hom(m^2, R/m^2): the truncated carrier of m^2 against R/m^2.
  auto m2 = QIdeal::power_of_max(QQ, r2, 2);
  int top = 5;
  auto carrier = subquotient_module(m2, QIdeal::zero(QQ, r2, top), top);
  auto target = quotient_module(m2);
  CHECK(carrier.truncated);
  for (int e = -4; e <= -1; ++e) {
    auto h = graded_hom(carrier, target, e);
    CHECK(h.dim == (e == -1 ? 6u : 0u));
    for (const auto& L : h.basis) CHECK(hom_residual_is_zero(carrier, target, e, L));
  }
  // Agrees with the degreewise tangent engine.
  CHECK(tangent_graded(m2, -1).dim == 6);
  CHECK(tangent_graded(m2, -2).dim == 0);
  CHECK(tangent_graded(m2, 0).dim == 0);
}

TEST_CASE("single ideal tangent spaces") {
  auto r2 = make_ring(2);
  auto r3 = make_ring(3);
  auto r4 = make_ring(4);

  auto rm = tnt_check(Nesting<RationalField>({QIdeal::power_of_max(QQ, r3, 1)}));
  CHECK(rm.at(-1) == 3);
  CHECK(rm.total == 3);
  CHECK(rm.theta_rank == 3);
  CHECK(rm.verdict == TntVerdict::Certified);

  auto rm2 = tnt_check(Nesting<RationalField>({QIdeal::power_of_max(QQ, r2, 2)}));
  CHECK(rm2.at(-1) == 6);
  CHECK(rm2.theta_rank == 2);
  CHECK_FALSE(rm2.tnt);
  CHECK(rm2.verdict == TntVerdict::FailedOverRational);
  auto pm2 = tnt_check(Nesting<PrimeField>({PIdeal::power_of_max(FP, r2, 2)}));
  CHECK(pm2.verdict == TntVerdict::FailedOverPrimeFieldNeedsRationalConfirm);

  auto z = tnt_check(Nesting<RationalField>({family_8points(QQ, r4)}));
  CHECK(z.tnt);
  CHECK(z.verdict == TntVerdict::Certified);
  CHECK(z.at(-1) == 4);
  CHECK(z.theta_valid);
  CHECK(z.window_edges_vanish);

  auto t = tangent_graded(family_8points(QQ, r4), -1);
  CHECK(t.dim == 4);
}

TEST_CASE("nested tangent spaces") {
  auto r3 = make_ring(3);
  auto r4 = make_ring(4);
  // r = 1 agrees with the single-ideal computation.
  auto Z = family_8points(QQ, r4);
  for (int e = -2; e <= 1; ++e) CHECK(nested_tangent_graded(Nesting<RationalField>({Z}), e).dim == tangent_graded(Z, e).dim);

  auto ex = tnt_check(Nesting<RationalField>({family_I1(QQ, r4, 2), family_I2(QQ, r4)}));
  CHECK(ex.at(-1) == 4);
  CHECK(ex.theta_rank == 4);
  CHECK(ex.verdict == TntVerdict::Certified);
  CHECK(ex.colengths == std::vector<std::size_t>{3, 7});

  // t^{=-1}[m > I] = t^{=-1}[I] + h_{R/I}(1)
  auto m = QIdeal::power_of_max(QQ, r3, 1);
  auto m2 = QIdeal::power_of_max(QQ, r3, 2);
  auto single = tnt_check(Nesting<RationalField>({m2}));
  auto pair = tnt_check(Nesting<RationalField>({m, m2}));
  CHECK(single.at(-1) == 18);
  CHECK(pair.at(-1) == single.at(-1) + 3);
  auto pz = tnt_check(Nesting<RationalField>({QIdeal::power_of_max(QQ, r4, 1), Z}));
  CHECK(pz.at(-1) == 4 + 4);

  CHECK_THROWS_AS(Nesting<RationalField>({family_I2(QQ, r4), family_I1(QQ, r4, 2)}), Error);
  CHECK_THROWS_AS(Nesting<RationalField>({family_delta(QQ, r4, 3)}), Error);
}

TEST_CASE("generator and syzygy oracle") {
  auto r2 = make_ring(2);
  auto r3 = make_ring(3);
  auto r4 = make_ring(4);
  check_oracle<RationalField>({QIdeal::power_of_max(QQ, r2, 2)});
  check_oracle<RationalField>({QIdeal::power_of_max(QQ, r3, 2)});
  check_oracle<RationalField>({family_8points(QQ, r4)});
  check_oracle<RationalField>({family_I2(QQ, r4)});
  check_oracle<RationalField>({generic_ideal_with_hilbert_function(QQ, r3, hf({1, 3, 4, 2}), 3).ideal});
  check_oracle<PrimeField>({generic_ideal_with_hilbert_function(FP, r3, hf({1, 3, 6, 8, 4}), 5).ideal});
  check_oracle<RationalField>({family_I1(QQ, r4, 2), family_I2(QQ, r4)});
  check_oracle<RationalField>({QIdeal::power_of_max(QQ, r3, 1), QIdeal::power_of_max(QQ, r3, 2)});
  auto I2 = QIdeal::from_generators(QQ, r4, sharpness_example_generators(*r4), 5, true);
  check_oracle<RationalField>({QIdeal::power_of_max(QQ, r4, 2), I2});
  check_oracle<RationalField>(
      {QIdeal::power_of_max(QQ, r4, 2), QIdeal::power_of_max(QQ, r4, 3), I2});
}

TEST_CASE("theta vectors satisfy every constraint") {
  auto r4 = make_ring(4);
  auto I2 = QIdeal::from_generators(QQ, r4, sharpness_example_generators(*r4), 5, true);
  for (const auto& nest : {Nesting<RationalField>({family_I1(QQ, r4, 2), family_I2(QQ, r4)}),
                           Nesting<RationalField>({QIdeal::power_of_max(QQ, r4, 2), I2}),
                           Nesting<RationalField>({family_8points(QQ, r4)})}) {
    auto th = theta(nest);
    CHECK(th.all_satisfy);
    CHECK(th.rank <= 4);
    CHECK(th.rank <= nested_tangent_graded(nest, -1).dim);
  }
}

TEST_CASE("field consistency") {
  auto r4 = make_ring(4);
  auto q = tnt_check(Nesting<RationalField>({family_I1(QQ, r4, 2), family_I2(QQ, r4)}));
  auto p = tnt_check(Nesting<PrimeField>({family_I1(FP, r4, 2), family_I2(FP, r4)}));
  CHECK(q.degrees == p.degrees);
  CHECK(q.theta_rank == p.theta_rank);
  auto qz = tnt_check(Nesting<RationalField>({family_8points(QQ, r4)}));
  auto pz = tnt_check(Nesting<PrimeField>({family_8points(FP, r4)}));
  CHECK(qz.degrees == pz.degrees);
}

TEST_CASE("sandwich insertion") {
  auto r4 = make_ring(4);
  auto I2 = QIdeal::from_generators(QQ, r4, sharpness_example_generators(*r4), 5, true);
  Nesting<RationalField> base({QIdeal::power_of_max(QQ, r4, 2), I2});
  CHECK(sandwich_insert(base, 1, 3).colengths() == std::vector<std::size_t>{5, 15, 20});

  Nesting<RationalField> ex({family_I1(QQ, r4, 2), family_I2(QQ, r4)});
  CHECK(sandwich_insert(ex, 1, 2).colengths() == std::vector<std::size_t>{3, 5, 7});

  Nesting<RationalField> z({family_8points(QQ, r4)});
  auto front = sandwich_insert(z, 0, 1);
  CHECK(front.colengths() == std::vector<std::size_t>{1, 8});

  CHECK_THROWS_AS(sandwich_insert(ex, 1, 3), Error);
  CHECK_THROWS_AS(sandwich_insert(ex, 0, 2), Error);
  CHECK_THROWS_AS(sandwich_insert(ex, 2, 2), Error);
  CHECK(sandwich_insert(ex, 2, 3).colengths() == std::vector<std::size_t>{3, 7, 15});
}

TEST_CASE("sandwich identities") {
  auto r4 = make_ring(4);
  Nesting<RationalField> ex({family_I1(QQ, r4, 2), family_I2(QQ, r4)});
  auto s = sandwich_identity_check(ex, 1, 2);
  CHECK(s.lemma_hypotheses);
  CHECK(s.lemma_discrepancy == 0);
  CHECK(s.prop_hypotheses);
  CHECK(s.jump == 4);
  CHECK(s.jump_statement == 4);
  CHECK(s.nonneg_unchanged);
  CHECK(s.projection_bound);
  CHECK(s.enlarged.at(-1) == 4 + 2 * (4 - 2));

  // [I] -> [m > I]
  auto front = sandwich_identity_check(Nesting<RationalField>({family_8points(QQ, r4)}), 0, 1);
  CHECK(front.lemma_discrepancy == 0);
  CHECK(front.hom_dim == 4);

  // appending m^k after the last ideal
  auto back = sandwich_identity_check(Nesting<RationalField>({family_8points(QQ, r4)}), 1, 3);
  CHECK(back.lemma_hypotheses);
  CHECK(back.lemma_discrepancy == 0);

  auto I2 = QIdeal::from_generators(QQ, r4, sharpness_example_generators(*r4), 5, true);
  auto sh = sandwich_identity_check(Nesting<RationalField>({QIdeal::power_of_max(QQ, r4, 2), I2}), 1, 3);
  CHECK(sh.base.at(-2) == 10);
  CHECK(sh.base.at(-3) == 8);
  CHECK(sh.base.at(-4) == 0);
  CHECK_FALSE(sh.lemma_hypotheses);
  CHECK_FALSE(sh.prop_hypotheses);
  CHECK(sh.lemma_discrepancy ==
        static_cast<std::int64_t>(sh.enlarged.t_neg) - static_cast<std::int64_t>(sh.base.t_neg + sh.hom_dim));
  CHECK(sh.jump_statement == 30);
  CHECK(sh.jump_example == 100);
  CHECK(sh.matched_convention() == "statement+1");
}

TEST_CASE("report serialization") {
  auto r4 = make_ring(4);
  auto rep = tnt_check(Nesting<PrimeField>({family_I1(FP, r4, 2), family_I2(FP, r4)}));
  auto js = rep.to_json();
  CHECK(js.find(R"("degrees":{"-3":0,"-2":0,"-1":4,"0":20,"1":0})") != std::string::npos);
  CHECK(js.find(R"("tnt":"certified")") != std::string::npos);
  CHECK(js.find(R"("field":"F32003")") != std::string::npos);
  CHECK(js.find(R"("schema":1)") != std::string::npos);
}
