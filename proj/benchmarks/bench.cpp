#include <benchmark/benchmark.h>

#include <random>

#include "logtev/blowup.hpp"
#include "logtev/nilring.hpp"
#include "logtev/tevelev.hpp"

using namespace logtev;

namespace {

NilPoly random_poly(std::mt19937_64& rng, int M, int terms) {
  NilPoly p(M);
  std::uniform_int_distribution<std::uint64_t> mask(
      0, (std::uint64_t{1} << M) - 1);
  for (int i = 0; i < terms; ++i) {
    NilPoly mono = NilPoly::constant(M, 1 + static_cast<long>(rng() % 5));
    Monomial m = mask(rng);
    for (int g = 0; g < M; ++g) {
      if (m & (Monomial{1} << g)) {
        mono = mul(mono, NilPoly::generator(M, g));
      }
    }
    p = add(p, mono);
  }
  return p;
}

void BM_nilring_mul(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  NilPoly p = random_poly(rng, M, 32);
  NilPoly q = random_poly(rng, M, 32);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(p, q));
  }
}
BENCHMARK(BM_nilring_mul)->Arg(8)->Arg(12)->Arg(16);

void BM_nilring_invert(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  NilPoly u = add(NilPoly::constant(M, 1), random_poly(rng, M, 16));
  u = add(sub(u, NilPoly::constant(M, u.coefficient(0))),
          NilPoly::constant(M, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(invert_unit(u, M));
  }
}
BENCHMARK(BM_nilring_invert)->Arg(8)->Arg(12);

void BM_integral_xrsa(benchmark::State& state) {
  GammaXrsa g;
  g.r = 1;
  g.s = 1;
  g.a = 1;
  g.b = 2;
  g.c = 3;
  g.mu.resize(4);
  g.mu[0].parts = {1};
  g.mu[1].parts = {1, 1};
  g.mu[2].parts = {1, 1};
  g.mu[3].parts = {1, 1, 1};
  // m = 8, n = 5.
  for (auto _ : state) {
    benchmark::DoNotOptimize(integral_xrsa(g));
  }
}
BENCHMARK(BM_integral_xrsa);

void BM_excess_blp2(benchmark::State& state) {
  GammaBlp2 g;
  g.d = 6;
  g.mu.resize(5);
  g.mu[0].parts = {1};
  g.mu[1].parts = {1};
  g.mu[2].parts = {1, 1, 1, 1};
  g.mu[3].parts = {5};
  g.mu[4].parts = {5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(excess_corrected_logtev(g));
  }
}
BENCHMARK(BM_excess_blp2);

}  // namespace

BENCHMARK_MAIN();
