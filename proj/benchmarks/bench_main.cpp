#include <benchmark/benchmark.h>

#include <random>

#include "aks/aks.hpp"
#include "aks/fastdiv.hpp"
#include "aks/modpoly.hpp"

namespace {

constexpr std::uint64_t kPrime = 2147483647;

aks::ModPoly random_poly(std::mt19937_64& rng, std::uint64_t m, std::size_t deg) {
  std::vector<aks::Residue> c(deg + 1);
  for (auto& x : c) x = rng() % m;
  c.back() = 1 + rng() % (m - 1);
  return aks::ModPoly(m, std::move(c));
}

template <class Divide>
void division(benchmark::State& state, Divide divide) {
  std::mt19937_64 rng(state.range(0));
  const auto d = static_cast<std::size_t>(state.range(0));
  const aks::ModPoly p = random_poly(rng, kPrime, 2 * d);
  const aks::ModPoly s = random_poly(rng, kPrime, d);
  for (auto _ : state) benchmark::DoNotOptimize(divide(p, s));
  state.SetComplexityN(state.range(0));
}

void BM_Schoolbook(benchmark::State& state) { division(state, aks::schoolbook_divide); }
void BM_KungSieveking(benchmark::State& state) {
  division(state, [](const aks::ModPoly& p, const aks::ModPoly& s) { return aks::ks_divide(p, s); });
}
void BM_KungSievekingGeometric(benchmark::State& state) {
  division(state, [](const aks::ModPoly& p, const aks::ModPoly& s) {
    return aks::ks_divide(p, s, aks::InverseMethod::geometric_series);
  });
}

void BM_Multiply(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto d = static_cast<std::size_t>(state.range(0));
  const aks::ModPoly a = random_poly(rng, kPrime, d), b = random_poly(rng, kPrime, d);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(state.range(0));
}

void BM_Congruence(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(aks::check_congruence(n, 401, 1));
}

void BM_AksPrime(benchmark::State& state) {
  const aks::Natural n = aks::from_u64(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(aks::aks_is_prime(n));
}

}  // namespace

BENCHMARK(BM_Schoolbook)->RangeMultiplier(4)->Range(64, 4096)->Complexity();
BENCHMARK(BM_KungSieveking)->RangeMultiplier(4)->Range(64, 4096)->Complexity();
BENCHMARK(BM_KungSievekingGeometric)->RangeMultiplier(4)->Range(64, 256);
BENCHMARK(BM_Multiply)->RangeMultiplier(4)->Range(64, 4096)->Complexity();
BENCHMARK(BM_Congruence)->Arg(1000003)->Arg(999999999989)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AksPrime)->Arg(10007)->Arg(1000003)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
