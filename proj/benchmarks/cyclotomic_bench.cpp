#include <benchmark/benchmark.h>

#include "lehmer/cyclotomic.hpp"
#include "lehmer/numtheory.hpp"

namespace {

using namespace lehmer;

void BM_CyclotomicCached(benchmark::State& state) {
  const auto d = static_cast<std::uint64_t>(state.range(0));
  cyclotomic(d);
  for (auto _ : state) benchmark::DoNotOptimize(cyclotomic(d));
}
BENCHMARK(BM_CyclotomicCached)->Arg(105)->Arg(1155);

void BM_ProfileCyclotomicFree(benchmark::State& state) {
  const IntPoly f = parse_poly("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1");
  for (auto _ : state) benchmark::DoNotOptimize(cyclo_profile(f));
}
BENCHMARK(BM_ProfileCyclotomicFree);

void BM_ProfileMixed(benchmark::State& state) {
  const IntPoly f = pow(cyclotomic(12), 3) * cyclotomic(7) * parse_poly("x^4+3*x^2+x+2");
  for (auto _ : state) benchmark::DoNotOptimize(cyclo_profile(f));
}
BENCHMARK(BM_ProfileMixed);

void BM_GcdCoprime(benchmark::State& state) {
  const IntPoly a = pow(parse_poly("x^3-x-1"), 6);
  const IntPoly b = x_pow_minus_one(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coprime(a, b));
}
BENCHMARK(BM_GcdCoprime)->Arg(60)->Arg(360);

void BM_Resultant(benchmark::State& state) {
  const IntPoly a = pow(parse_poly("x^2-3*x+7"), 8);
  const IntPoly b = pow(parse_poly("2*x^3+x-5"), 5);
  for (auto _ : state) benchmark::DoNotOptimize(resultant(a, b));
}
BENCHMARK(BM_Resultant);

}  // namespace
