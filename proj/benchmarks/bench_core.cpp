#include <benchmark/benchmark.h>

#include <random>

#include "hilbtan/families.hpp"
#include "hilbtan/resolutions.hpp"
#include "hilbtan/strata.hpp"
#include "hilbtan/tangent.hpp"

using namespace hilbtan;

namespace {

const PrimeField FP(32003);
const RationalField QQ;

template <typename F>
void rank_of_random(benchmark::State& state, const F& field) {
  auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<SparseRow<F>> rows(n);
  for (auto& r : rows) {
    for (std::size_t c = 0; c < n; ++c) {
      if (rng() % 4 == 0) r.emplace_back(static_cast<std::uint32_t>(c), field.from_mpz(mpz_class(static_cast<long>(rng() % 19) - 9)));
    }
  }
  for (auto _ : state) {
    Echelon<F> e(field, n);
    for (const auto& r : rows) e.insert(r);
    benchmark::DoNotOptimize(e.rank());
  }
}

void BM_EchelonPrime(benchmark::State& state) { rank_of_random(state, FP); }
void BM_EchelonRational(benchmark::State& state) { rank_of_random(state, QQ); }

void BM_BettiDelta4J4(benchmark::State& state) {
  auto I = family_I2(QQ, make_ring(4));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_resolution(I).betti.entries.size());
}

void BM_FamilyTnt(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto ring = make_ring(n);
  Nesting<PrimeField> nest({family_I1(FP, ring, 2), family_I2(FP, ring)});
  for (auto _ : state) benchmark::DoNotOptimize(tnt_check(nest).tnt);
}

void BM_EightPointsTangent(benchmark::State& state) {
  Nesting<RationalField> nest({family_8points(QQ, make_ring(4))});
  for (auto _ : state) benchmark::DoNotOptimize(tnt_check(nest).total);
}

void BM_GenericIdeal(benchmark::State& state) {
  auto ring = make_ring(4);
  HilbertFunction q{{1, 4, 10, 18, 10}, false};
  for (auto _ : state) benchmark::DoNotOptimize(generic_ideal_with_hilbert_function(FP, ring, q, 1).ideal.colength());
}

void BM_CensusCell(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census_cell(n, n / 2, FieldSpec::prime_field(), 0).t_minus_one);
}

}  // namespace

BENCHMARK(BM_EchelonPrime)->Arg(100)->Arg(400);
BENCHMARK(BM_EchelonRational)->Arg(40)->Arg(80);
BENCHMARK(BM_BettiDelta4J4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FamilyTnt)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EightPointsTangent)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenericIdeal)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusCell)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
