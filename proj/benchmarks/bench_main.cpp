#include <benchmark/benchmark.h>

#include <random>

#include "qheun/elliptic.hpp"
#include "qheun/heun.hpp"
#include "qheun/random_params.hpp"

using namespace qheun;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<long> d(-20, 20);
  std::vector<Rational> c(degree + 1);
  for (auto& v : c) v = Rational(d(rng), 1 + (d(rng) & 7));
  if (c.back().is_zero()) c.back() = Rational(1);
  return Polynomial(std::move(c));
}

EtaParams w2_params(const GridParams& g) {
  EtaParams p;
  p.which = Which::W2;
  for (int j = 0; j < 9; ++j) p.eta[j] = Rational(j + 1, 3);
  const Rational q = g.q();
  p.eta[8] = q * q * g.a * g.a * g.b * g.b * p.eta[0];
  p.c0 = Rational(2);
  return p;
}

void BM_PolynomialGcd(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int deg = static_cast<int>(state.range(0));
  const Polynomial common = random_poly(rng, deg / 2);
  const Polynomial a = common * random_poly(rng, deg - deg / 2);
  const Polynomial b = common * random_poly(rng, deg - deg / 2);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolynomialGcd)->Arg(4)->Arg(8)->Arg(16);

void BM_PartialFractions(benchmark::State& state) {
  ParamSampler ps(2);
  const GridParams g = ps.grid(static_cast<int>(state.range(0)) + 1);
  const auto W = build_W2(g, w2_params(g));
  const auto f = apply(W, elementary(g, Series::X, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(partial_fractions_x(f, g));
}
BENCHMARK(BM_PartialFractions)->Arg(2)->Arg(6);

void BM_BuildW2(benchmark::State& state) {
  ParamSampler ps(3);
  const GridParams g = ps.grid(2);
  const EtaParams p = w2_params(g);
  for (auto _ : state) benchmark::DoNotOptimize(build_W2(g, p));
}
BENCHMARK(BM_BuildW2);

void BM_ApplyW2(benchmark::State& state) {
  ParamSampler ps(4);
  const GridParams g = ps.grid(static_cast<int>(state.range(0)) + 1);
  const auto W = build_W2(g, w2_params(g));
  const auto f = elementary(g, Series::Y, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apply(W, f));
}
BENCHMARK(BM_ApplyW2)->Arg(1)->Arg(6);

void BM_VerifyRaisingW2(benchmark::State& state) {
  ParamSampler ps(5);
  const int n = static_cast<int>(state.range(0));
  const GridParams g = ps.grid(n + 1);
  const auto W = build_W2(g, w2_params(g));
  for (auto _ : state) benchmark::DoNotOptimize(verify_raising(W, g, RaisingMode::TwoSeries, n, n, {1}));
}
BENCHMARK(BM_VerifyRaisingW2)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Theta(benchmark::State& state) {
  const long prec = state.range(0);
  const auto ctx = ThetaContext::make(BigComplex(BigFloat::parse("1e-4", prec), BigFloat(prec)), prec);
  const BigComplex z(Rational(37, 100), prec);
  for (auto _ : state) benchmark::DoNotOptimize(theta(z, ctx));
}
BENCHMARK(BM_Theta)->Arg(128)->Arg(256)->Arg(1024);

void BM_RvdCoefficients(benchmark::State& state) {
  const long prec = state.range(0);
  TakemuraFixture f;
  const auto ctx = ThetaContext::make(BigComplex(BigFloat::parse("1e-4", prec), BigFloat(prec)), prec);
  EllipticParams ep;
  ep.s = BigComplex(f.s, prec);
  ep.t = BigComplex(f.t, prec);
  ep.p = ctx.p;
  for (int j = 0; j < 8; ++j) ep.a[j] = BigComplex(f.s * f.e[j] * f.e[j], prec);
  const BigComplex z(Rational(61, 100), prec);
  for (auto _ : state) benchmark::DoNotOptimize(rvd_coefficients(z, ep, ctx, LReading::Swapped));
}
BENCHMARK(BM_RvdCoefficients)->Arg(256)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
