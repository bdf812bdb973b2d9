#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "doctest.h"
#include "hilbtan/resolutions.hpp"
#include "hilbtan/strata.hpp"

using namespace hilbtan;

namespace {

const RationalField QQ;
const PrimeField FP(32003);

HilbertFunction hf(std::initializer_list<std::int64_t> v) { return HilbertFunction{v, false}; }

// Monomials of degree d in n variables, counted by recursion on the last exponent.
std::int64_t count_monomials(int n, int d) {
  if (d < 0) return 0;
  if (n == 1) return 1;
  std::int64_t c = 0;
  for (int a = 0; a <= d; ++a) c += count_monomials(n - 1, d - a);
  return c;
}

std::filesystem::path temp_store(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("hilbtan_" + name + "_" + std::to_string(::getpid()) + ".jsonl");
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("smoothable component dimension") {
  CHECK(smoothable_dim({22}, 2) == 44);
  CHECK(smoothable_dim({1}, 5) == 5);
  for (int n = 4; n <= 9; ++n) {
    for (int s = 0; s <= n; ++s) CHECK(smoothable_dim({s + 1, n + 3}, n) == n * (n + 3));
  }
  CHECK_THROWS_AS(smoothable_dim({5, 3}, 3), Error);
  CHECK_THROWS_AS(smoothable_dim({}, 3), Error);
}

TEST_CASE("two-step strata") {
  auto r = two_step_stratum_dim(hf({1, 3, 6, 8, 4}), 3);
  CHECK(r.value == 44);
  CHECK(r.order == 3);
  CHECK(r.without_linear_syzygies);
  CHECK(r.warning.empty());

  // The point m: q(k+1) = 0 and nothing is left to vary.
  CHECK(two_step_stratum_dim(hf({1}), 4).value == 0);

  for (int n = 4; n <= 15; ++n) {
    auto c = two_step_stratum_dim(hf({1, n, 2}), n);
    CHECK(c.value == compressed_1n2_dim(n));
    CHECK_FALSE(c.without_linear_syzygies);
    CHECK_FALSE(c.warning.empty());
  }

  try {
    two_step_stratum_dim(hf({1, 3, 6, 8, 4, 1}), 3);
    FAIL("expected NotTwoStep");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTwoStep);
  }
  try {
    // h(3) = 9 and h(4) = 12 < 3 * 9 with q(4) != 0.
    two_step_stratum_dim(hf({1, 3, 6, 1, 3}), 3);
    FAIL("expected HasLinearSyzygies");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HasLinearSyzygies);
  }
  CHECK_THROWS_AS(two_step_stratum_dim(hf({1, 4}), 3), Error);
}

TEST_CASE("two-step predicate agrees with the ideal-level check") {
  auto r3 = make_ring(3);
  for (auto q : {hf({1, 3, 6, 8, 4}), hf({1, 3, 6, 6}), hf({1, 3, 2})}) {
    auto G = generic_ideal_with_hilbert_function(FP, r3, q, 7);
    bool closed_form = true;
    try {
      closed_form = two_step_stratum_dim(q, 3).without_linear_syzygies;
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::HasLinearSyzygies);
      closed_form = false;
    }
    CHECK(closed_form == !has_linear_syzygies(G.ideal));
  }
}

TEST_CASE("compressed and nested strata") {
  CHECK(compressed_1n2_dim(4) == 16);
  CHECK(compressed_1n2_dim(15) == 236);
  CHECK(compressed_1n2_dim(2) == 2);
  for (int n = 2; n <= 20; ++n) {
    // Gr(2, R_2) has dimension 2 (dim R_2 - 2).
    CHECK(compressed_1n2_dim(n) == 2 * (count_monomials(n, 2) - 2));
    CHECK(compressed_1n2_dim(n) == n * n + n - 4);
  }
  CHECK(nested_stratum_dim_1s_1n2(4, 2) == 20);
  CHECK(nested_stratum_dim_1s_1n2(8, 2) == 80);
  for (int n = 2; n <= 10; ++n) CHECK(nested_stratum_dim_1s_1n2(n, n) == compressed_1n2_dim(n));
  CHECK_THROWS_AS(nested_stratum_dim_1s_1n2(4, 0), Error);
  CHECK_THROWS_AS(compressed_1n2_dim(1), Error);
}

TEST_CASE("smoothability gap") {
  auto g = gap(8, 2);
  CHECK(g.gap == 0);
  CHECK(g.verdict == GapVerdict::Boundary);
  CHECK(gap(10, 3).gap == -7);
  CHECK(gap(10, 3).verdict == GapVerdict::NonSmoothableByDimension);
  CHECK(gap(4, 2).gap == 4);
  CHECK(gap(4, 2).verdict == GapVerdict::Inconclusive);

  for (int n = 4; n <= 30; ++n) {
    for (int s = 2; s <= n - 2; ++s) {
      auto r = gap(n, s);
      CHECK(r.gap == n * (1 - s) + 4 + s * s);
      CHECK(r.gap == r.dim_smoothable - r.dim_stratum_total);
    }
  }
  for (int n = 8; n <= 30; ++n) {
    for (int s = 0; s <= n; ++s) CHECK((gap_report(n, s).gap <= 0) == (s >= 2 && s <= n - 2));
  }
  CHECK_THROWS_AS(gap(8, 1), Error);
  CHECK_THROWS_AS(gap(3, 1), Error);
  CHECK(gap_report(4, 0).gap == 8);
}

TEST_CASE("Hilbert function reduction to fewer variables") {
  auto r = lemma27_reduce(hf({1, 2}), 4);
  CHECK(r.base_n == 2);
  CHECK(r.offset == 4);
  // Gr(2, 4): the locus L + m^2.
  CHECK(r.offset == 2 * (4 - 2));
  CHECK(lemma27_reduce(hf({1, 6, 2}), 6).offset == 0);

  for (auto h : {hf({1, 2}), hf({1, 3, 2}), hf({1, 2, 3, 1}), hf({1, 3, 6, 8, 4})}) {
    int h1 = static_cast<int>(h.at(1));
    for (int n = h1; n <= h1 + 6; ++n) {
      for (int mid = h1; mid <= n; ++mid) {
        // Going n -> mid is a Gr(mid, n)-style step on top of mid -> h1.
        auto direct = lemma27_reduce(h, n).offset;
        auto step = lemma27_reduce(h, mid).offset;
        std::int64_t d = h.size();
        std::int64_t delta = static_cast<std::int64_t>(h1) * (n - mid) + (n - mid) * (d - h1 - 1);
        CHECK(direct == step + delta);
      }
    }
  }
  CHECK_THROWS_AS(lemma27_reduce(hf({1, 5}), 4), Error);
}

TEST_CASE("non-reducedness certificates") {
  auto r4 = make_ring(4);
  Nesting<RationalField> pair({family_I1(QQ, r4, 2), family_I2(QQ, r4)});
  auto rep = nonreducedness_certificate(pair, 1, 2);
  CHECK(rep.base_defect == 0);
  CHECK(rep.sandwich_defect == 2 * (4 - 2));
  CHECK(rep.certified);
  CHECK(rep.dim_v == static_cast<std::int64_t>(rep.base.t_nonneg) + 4);

  Nesting<RationalField> points({family_8points(QQ, r4)});
  auto front = nonreducedness_certificate(points, 0, 1);
  CHECK(front.base_defect == 0);
  CHECK(front.sandwich_defect == 4);  // h(1) of (1,4,3)
  CHECK(front.sandwiched.at(-1) == 4 + 4);

  Nesting<RationalField> sq({HomogeneousIdeal<RationalField>::power_of_max(QQ, r4, 2)});
  try {
    nonreducedness_certificate(sq, 0, 1);
    FAIL("expected HypothesesNotMet");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesesNotMet);
  }
  CHECK_THROWS_AS(nonreducedness_certificate(pair, 1, 1), Error);
  CHECK(rep.to_json().find("\"certified\":true") != std::string::npos);
}

TEST_CASE("multiplicity report") {
  auto r5 = thmC_report(5);
  CHECK(r5.covered);
  CHECK(r5.length == 22);
  CHECK(r5.stratum_dim == 44);
  CHECK(r5.smoothable_dim == 44);
  CHECK(r5.containment_power == 5);
  CHECK_FALSE(r5.iarrobino.has_value());

  auto r8 = thmC_report(8);
  REQUIRE(r8.iarrobino.has_value());
  CHECK(r8.iarrobino_length == 78);
  CHECK(r8.iarrobino->length() == 8);

  CHECK_FALSE(thmC_report(2).covered);
  CHECK(thmC_report(2).to_json() == "{\"schema\":1,\"multiplicity\":2,\"covered\":false}");
  CHECK_THROWS_AS(thmC_report(0), Error);
}

TEST_CASE("census cells") {
  auto c = census_cell(4, 2, FieldSpec::prime_field(), 0);
  CHECK(c.error.empty());
  CHECK(c.gap == 4);
  CHECK(c.has_family);
  CHECK(c.t_minus_one == 4);
  CHECK(c.tnt == "certified");
  CHECK(c.stratum_bound_ok);

  auto far = census_cell(10, 3, FieldSpec::prime_field(), 0);
  CHECK(far.gap == -7);
  CHECK(far.verdict == "non_smoothable_by_dimension");

  auto edge = census_cell(4, 0, FieldSpec::prime_field(), 0);
  CHECK_FALSE(edge.has_family);
  CHECK(edge.t_minus_one == -1);
  CHECK(edge.to_json().find("t_minus_one") == std::string::npos);

  auto back = CensusRecord::from_json(c.to_json());
  CHECK(back.key() == c.key());
  CHECK(back.t_minus_one == 4);
  CHECK(back.tnt == "certified");
}

TEST_CASE("census store is resumable and worker-count independent") {
  auto path = temp_store("census");
  CensusOptions opts;
  opts.n_lo = 4;
  opts.n_hi = 6;
  opts.store = path.string();
  opts.threads = 3;
  std::size_t computed = 0;
  opts.on_record = [&](const CensusRecord&) { ++computed; };
  auto first = census(opts);
  CHECK(computed == 5 + 6 + 7);
  REQUIRE(first.size() == 18);
  for (const auto& r : first) {
    CHECK(r.error.empty());
    if (r.tnt == "certified") CHECK(r.t_minus_one == r.n);
  }

  computed = 0;
  auto again = census(opts);
  CHECK(computed == 0);
  REQUIRE(again.size() == first.size());
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(again[i].to_json() == first[i].to_json());

  // Drop the last line and cut the one before in half: both are recomputed.
  std::vector<std::string> lines;
  {
    std::ifstream in(path);
    for (std::string l; std::getline(in, l);) lines.push_back(l);
  }
  REQUIRE(lines.size() == 18);
  {
    std::ofstream out(path, std::ios::trunc);
    for (std::size_t i = 0; i + 2 < lines.size(); ++i) out << lines[i] << '\n';
    out << lines[16].substr(0, lines[16].size() / 2);
  }
  opts.threads = 1;
  auto resumed = census(opts);
  CHECK(computed == 2);
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(resumed[i].key() == first[i].key());
    CHECK(resumed[i].gap == first[i].gap);
    CHECK(resumed[i].t_minus_one == first[i].t_minus_one);
    CHECK(resumed[i].tnt == first[i].tnt);
  }

  auto csv = census_csv(resumed);
  CHECK(csv.rfind("n\\s,0,1,2,3,4,5,6\n", 0) == 0);
  CHECK(csv.find("\n4,8,5,4^4,5,8,,\n") != std::string::npos);
  std::filesystem::remove(path);
}
