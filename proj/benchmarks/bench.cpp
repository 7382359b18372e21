// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "tia/experiments.hpp"
#include "tia/interpolation.hpp"
#include "tia/projection.hpp"
#include "tia/random.hpp"
#include "tia/sobolev.hpp"
#include "tia/standard_position.hpp"

namespace {

using namespace tia;

void BM_RP(benchmark::State& state) {
  const StandardPosition sp = standard_position(sliver(0.05, 2.5), 3);
  for (auto _ : state) benchmark::DoNotOptimize(r_p(sp).R_P);
}
BENCHMARK(BM_RP);

void BM_ProjectedCircumradius(benchmark::State& state) {
  Rng rng(7);
  const Tetrahedron k = random_tetrahedron(rng);
  for (auto _ : state) benchmark::DoNotOptimize(projected_circumradius(k).R_K);
}
BENCHMARK(BM_ProjectedCircumradius);

void BM_Interpolate(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  Rng rng(11);
  const Tetrahedron k = random_tetrahedron(rng);
  const MultiPolynomial v = MultiPolynomial::monomial({degree + 1, 0, 0}) +
                            MultiPolynomial::monomial({0, 1, 1}, -0.5);
  for (auto _ : state) benchmark::DoNotOptimize(interpolate(k, degree, v));
}
BENCHMARK(BM_Interpolate)->DenseRange(1, 4);

void BM_Seminorm(benchmark::State& state) {
  const Tetrahedron k = make_family({SqueezedFamily{}, {4.0}}).front().tet;
  const MultiPolynomial q = MultiPolynomial::monomial({3, 0, 0}) +
                            MultiPolynomial::monomial({1, 1, 1}, 2.0);
  const SeminormSpec spec{1, static_cast<double>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(seminorm(k, q, spec));
}
BENCHMARK(BM_Seminorm)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
