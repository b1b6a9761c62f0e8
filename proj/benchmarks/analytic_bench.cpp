#include <benchmark/benchmark.h>

#include "lehmer/analytic.hpp"
#include "lehmer/cyclotomic.hpp"

namespace {

using namespace lehmer;

void BM_MahlerLehmer(benchmark::State& state) {
  const IntPoly f = parse_poly("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1");
  for (auto _ : state) benchmark::DoNotOptimize(mahler_measure(f));
}
BENCHMARK(BM_MahlerLehmer);

void BM_MahlerDense(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  std::vector<Integer> c(d + 1);
  for (std::size_t k = 0; k <= d; ++k) c[k] = static_cast<long>((k * 7919) % 21) - 10;
  c.back() = 1;
  c.front() = 3;
  const IntPoly f(c);
  for (auto _ : state) benchmark::DoNotOptimize(mahler_measure(f));
}
BENCHMARK(BM_MahlerDense)->Arg(16)->Arg(64)->Arg(128);

void BM_GraeffeLehmer(benchmark::State& state) {
  const IntPoly f = parse_poly("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1");
  for (auto _ : state) benchmark::DoNotOptimize(mahler_oracle(f));
}
BENCHMARK(BM_GraeffeLehmer);

void BM_SupNorm(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  std::vector<Integer> c(d + 1);
  for (std::size_t k = 0; k <= d; ++k) c[k] = static_cast<long>((k * 104729) % 201) - 100;
  c.back() = 1;
  const IntPoly t(c);
  for (auto _ : state) benchmark::DoNotOptimize(sup_norm(t));
}
BENCHMARK(BM_SupNorm)->Arg(8)->Arg(32)->Arg(128);

void BM_SupNormCyclotomicProduct(benchmark::State& state) {
  const IntPoly t = cyclotomic(1) * cyclotomic(2) * cyclotomic(3) * cyclotomic(4) * cyclotomic(6) * cyclotomic(12);
  for (auto _ : state) benchmark::DoNotOptimize(sup_norm(t));
}
BENCHMARK(BM_SupNormCyclotomicProduct);

}  // namespace
