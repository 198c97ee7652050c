#include <benchmark/benchmark.h>

#include <random>

#include "stone/spectrum.hpp"

using namespace stone;

namespace {

FpPoly randomSquarefree(std::mt19937_64& rng, PrimeField field, std::size_t deg) {
  while (true) {
    Vec coeffs(deg + 1, 0);
    for (std::size_t i = 0; i < deg; ++i) coeffs[i] = static_cast<Fel>(rng() % field.p());
    coeffs[deg] = 1;
    FpPoly f(field, coeffs);
    if (!f.derivative().isZero() && polyGcd(f, f.derivative()).degree() == 0) return f;
  }
}

}  // namespace

static void BM_PearlOfQuotient(benchmark::State& state) {
  PrimeField field(2);
  std::mt19937_64 rng(1);
  const std::size_t deg = static_cast<std::size_t>(state.range(0));
  Vec coeffs(deg + 1, 0);
  for (std::size_t i = 0; i < deg; ++i) coeffs[i] = static_cast<Fel>(rng() % 2);
  coeffs[deg] = 1;
  FiniteAlgebra a = univariateQuotient(field, FpPoly(field, coeffs));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pearl(a).pearlAlgebra.dim());
  }
}
BENCHMARK(BM_PearlOfQuotient)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_TensorConstruction(benchmark::State& state) {
  PrimeField field(2);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  FiniteAlgebra a = functionAlgebra(field, n);
  Caps caps;
  caps.elementCap = std::uint64_t{1} << 40;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tensorAlgebra(a, a, caps).algebra.dim());
  }
}
BENCHMARK(BM_TensorConstruction)->Arg(2)->Arg(4)->Arg(6);

static void BM_EnumerateHoms(benchmark::State& state) {
  PrimeField field(2);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  FiniteAlgebra s = functionAlgebra(field, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerateHoms(s, s).size());
  }
}
BENCHMARK(BM_EnumerateHoms)->Arg(2)->Arg(3)->Arg(4);

static void BM_FactorViaPearl(benchmark::State& state) {
  PrimeField field(2);
  std::mt19937_64 rng(2);
  FpPoly f = randomSquarefree(rng, field, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorViaPearl(field, f).size());
  }
}
BENCHMARK(BM_FactorViaPearl)->Arg(8)->Arg(16)->Arg(32);

static void BM_PiZero(benchmark::State& state) {
  PrimeField field(2);
  FiniteAlgebra f4 = univariateQuotient(field, FpPoly(field, Vec{1, 1, 1}));
  FiniteAlgebra a = tensorAlgebra(f4, f4).algebra;
  for (int i = 1; i < state.range(0); ++i) a = productAlgebra(a, f4).algebra;
  for (auto _ : state) {
    benchmark::DoNotOptimize(piZero(a).components.size());
  }
}
BENCHMARK(BM_PiZero)->Arg(1)->Arg(2)->Arg(4);

static void BM_BruteForceIdempotents(benchmark::State& state) {
  PrimeField field(2);
  FiniteAlgebra a = functionAlgebra(field, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerateIdempotents(a).size());
  }
}
BENCHMARK(BM_BruteForceIdempotents)->Arg(6)->Arg(10)->Arg(12);

BENCHMARK_MAIN();
