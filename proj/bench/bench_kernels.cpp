// Serial reference versus parallel kernels, and schoolbook versus Karatsuba.

#include <benchmark/benchmark.h>

#include <random>

#include "hasse/localpoints.hpp"
#include "hasse/search.hpp"
#include "hasse/weil.hpp"

using namespace hasse;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_NormTable(benchmark::State& state) {
  const MonicIrreducible y(Poly::t(FieldOrder(static_cast<std::uint32_t>(state.range(1)))));
  for (auto _ : state) benchmark::DoNotOptimize(dset(y, exec_of(state)));
}
BENCHMARK(BM_NormTable)->ArgsProduct({{0, 1}, {3, 5}})->ArgNames({"parallel", "q"})->Unit(benchmark::kMillisecond);

void BM_WitnessCoverage(benchmark::State& state) {
  const FieldOrder F(5);
  const QuaternionData d(MonicIrreducible(parse_poly("t^4+2", F)), MonicIrreducible(parse_poly("t^2+t+1", F)));
  const auto places = lambda_set(d, 6);
  for (auto _ : state) benchmark::DoNotOptimize(search_witnesses(d, places, exec_of(state)));
  state.counters["places"] = static_cast<double>(places.size());
}
BENCHMARK(BM_WitnessCoverage)->ArgsProduct({{0, 1}})->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

void BM_PairSearch(benchmark::State& state) {
  const ExclusionTable table(MonicIrreducible(Poly::t(FieldOrder(3))));
  const SearchOptions options{.max_deg1 = 5, .max_deg2 = 2, .exec = exec_of(state)};
  for (auto _ : state) benchmark::DoNotOptimize(search_pairs(table, options));
}
BENCHMARK(BM_PairSearch)->ArgsProduct({{0, 1}})->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

Poly random_poly(std::mt19937_64& rng, FieldOrder order, std::size_t terms) {
  std::uniform_int_distribution<std::uint32_t> coeff(0, order.value() - 1);
  std::vector<Poly::Coeff> c(terms);
  for (auto& x : c) x = coeff(rng);
  c.back() = 1;
  return Poly(order, c);
}

void BM_MulSchoolbook(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const FieldOrder F(7);
  const Poly a = random_poly(rng, F, static_cast<std::size_t>(state.range(0)));
  const Poly b = random_poly(rng, F, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mul_schoolbook(a, b));
}
BENCHMARK(BM_MulSchoolbook)->RangeMultiplier(4)->Range(16, 4096);

void BM_MulKaratsuba(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const FieldOrder F(7);
  const Poly a = random_poly(rng, F, static_cast<std::size_t>(state.range(0)));
  const Poly b = random_poly(rng, F, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_MulKaratsuba)->RangeMultiplier(4)->Range(16, 4096);

}  // namespace

BENCHMARK_MAIN();
