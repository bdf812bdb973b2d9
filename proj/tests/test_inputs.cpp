#include "doctest.h"
#include "inputs.hpp"

using namespace hilbtan;

namespace {

const RationalField QQ;

HilbertFunction hf(std::initializer_list<std::int64_t> v) { return HilbertFunction{v, false}; }

HomogeneousIdeal<RationalField> resolve(const std::string& spec, int n) {
  cli::InputContext ctx;
  return cli::resolve_ideal(spec, QQ, make_ring(n), ctx);
}

}  // namespace

TEST_CASE("builtin names") {
  CHECK(cli::spec_nvars("I2:6") == 6);
  CHECK(cli::spec_nvars("I1:7,3") == 7);
  CHECK(cli::spec_nvars("m^3:5") == 5);
  CHECK(cli::spec_nvars("8points") == 4);
  CHECK(cli::spec_nvars("generic:q=(1,3,6,8,4),seed=2") == 3);
  CHECK(cli::spec_nvars("generic:q=(1,2),seed=2,n=5") == 5);
  CHECK_FALSE(cli::spec_nvars("x1^2, x2").has_value());

  CHECK(resolve("I2:5", 5).hilbert_function() == hf({1, 5, 2}));
  CHECK(resolve("I1:5,2", 5).hilbert_function() == hf({1, 2}));
  CHECK(resolve("m^3:3", 3).colength() == 10);
  CHECK(resolve("8points", 4).colength() == 8);
  CHECK(resolve("sharp", 4).hilbert_function() == hf({1, 4, 10, 3, 2}));
  CHECK(resolve("R:3", 3).colength() == 0);
  CHECK(resolve("generic:q=(1,4,3),seed=9", 4).hilbert_function() == hf({1, 4, 3}));

  cli::InputContext ctx;
  ctx.cutoff = 5;
  auto delta = cli::resolve_ideal("delta:4", QQ, make_ring(4), ctx, false);
  CHECK(delta.hilbert_function().truncated);
  CHECK(delta.quotient_dim(5) == 4);
}

TEST_CASE("generic inputs honour the seed") {
  cli::InputContext a, b;
  a.seed = 3;
  b.seed = 3;
  auto r = make_ring(3);
  auto I = cli::resolve_ideal("generic:q=(1,3,4,2)", QQ, r, a);
  auto J = cli::resolve_ideal("generic:q=(1,3,4,2),seed=3", QQ, r, b);
  CHECK(I.equals(J));
}

TEST_CASE("inline generators and variable inference") {
  CHECK(cli::max_variable("x1^2, x_12*x3") == 12);
  cli::InputContext ctx;
  CHECK(cli::chain_nvars({"x1^2, x1*x2, x2^2, x3"}, ctx) == 3);
  CHECK(cli::chain_nvars({"x1^2, x1*x2, x2^2, x3", "I2:4"}, ctx) == 4);
  ctx.nvars = 6;
  CHECK(cli::chain_nvars({"I2:4"}, ctx) == 6);

  auto I = resolve("x1^2, x1*x2, x2^2, x3, x4", 4);
  CHECK(I.hilbert_function() == hf({1, 2}));
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(resolve("I2:5", 4), Error);
  CHECK_THROWS_AS(resolve("generic:q=1,4,3", 4), Error);
  CHECK_THROWS_AS(resolve("x1 + x2^2", 2), Error);
  CHECK_THROWS_AS(resolve("@/nonexistent/gens.txt", 2), Error);
  cli::InputContext ctx;
  CHECK_THROWS_AS(cli::chain_nvars({"3"}, ctx), Error);
}
