#include <benchmark/benchmark.h>

#include "hecke/orbital.hpp"
#include "hecke/parahoric.hpp"
#include "hecke/spherical.hpp"

namespace {

using namespace hecke;

void bm_laurent_mult(benchmark::State& state) {
  LaurentScalar a = poincare_poly({3});
  LaurentScalar b = q_power(2) + LaurentScalar::v_power(-3) - LaurentScalar(7);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_laurent_mult);

void bm_schur_rank3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(schur(3, {4, 2, 0}));
}
BENCHMARK(bm_schur_rank3);

void bm_satake_rank3(benchmark::State& state) {
  auto f = SphericalHeckeElement::indicator({2, 1, -1});
  for (auto _ : state) benchmark::DoNotOptimize(satake(f));
}
BENCHMARK(bm_satake_rank3);

void bm_convolve_spherical(benchmark::State& state) {
  auto f = SphericalHeckeElement::indicator({2, 0});
  auto g = SphericalHeckeElement::indicator({1, -1});
  for (auto _ : state) benchmark::DoNotOptimize(convolve_spherical(f, g));
}
BENCHMARK(bm_convolve_spherical);

void bm_iwahori_product(benchmark::State& state) {
  auto a = IwahoriHeckeElement::basis(AffineWeylElement::translation({2, 0, -1}));
  auto b = IwahoriHeckeElement::basis(AffineWeylElement::simple(3, 0));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_iwahori_product);

void bm_smith_form(benchmark::State& state) {
  LocalField F(2, 1, 24);
  SplitMix rng(5);
  LocalMatrix g(F, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      g.at(i, j) = SeriesScalar::from_poly(
          F, static_cast<int>(rng.below(3)) - 1,
          {rng.below(2), rng.below(2), rng.below(2), rng.below(2)});
  for (auto _ : state) benchmark::DoNotOptimize(smith_exponents(g));
}
BENCHMARK(bm_smith_form);

void bm_unit_orbital(benchmark::State& state) {
  LocalField F(2, 1, 24);
  LocalMatrix gamma = LocalMatrix::companion(
      F, {SeriesScalar::from_poly(F, 0, {1, 1}), SeriesScalar::one(F)});
  auto unit_K = spherical_as_parahoric(SphericalHeckeElement::unit(2));
  for (auto _ : state) benchmark::DoNotOptimize(orbital_integral(gamma, unit_K));
}
BENCHMARK(bm_unit_orbital);

}  // namespace

BENCHMARK_MAIN();
