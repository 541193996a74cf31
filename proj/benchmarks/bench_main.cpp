#include <benchmark/benchmark.h>

#include "coxm06/cofactors.hpp"
#include "coxm06/gitcones.hpp"
#include "coxm06/modspace.hpp"
#include "coxm06/relations.hpp"
#include "coxm06/symmetry.hpp"

using namespace coxm06;

static void BM_PolynomialProduct(benchmark::State& state) {
  Polynomial p = plucker_images()[0] + plucker_images()[4] + plucker_images()[8];
  Polynomial q = to_parameters(f_pi(0)) + p;
  Polynomial acc = q;
  for (int i = 1; i < state.range(0); ++i) acc = acc * q;
  for (auto _ : state) benchmark::DoNotOptimize(acc * q);
}
BENCHMARK(BM_PolynomialProduct)->Arg(2)->Arg(4)->Arg(8);

static void BM_SectionSubstitution(benchmark::State& state) {
  const Polynomial& rep = representatives()[state.range(0) - 1];
  for (auto _ : state) benchmark::DoNotOptimize(section_substitution(rep));
}
BENCHMARK(BM_SectionSubstitution)->DenseRange(1, 5);

static void BM_CertifyAll(benchmark::State& state) {
  generate_all();
  for (auto _ : state) benchmark::DoNotOptimize(certify_all(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_CertifyAll)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Orbit(benchmark::State& state) {
  const Polynomial& rep = representatives()[state.range(0) - 1];
  for (auto _ : state) benchmark::DoNotOptimize(orbit_with_words(rep));
}
BENCHMARK(BM_Orbit)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

static void BM_ConeMembership(benchmark::State& state) {
  ConeSpec e = boundary_cone();
  DivisorClass q = class_of_kv(kv_matchings()[0]);
  for (auto _ : state) benchmark::DoNotOptimize(cone_contains(q, e));
}
BENCHMARK(BM_ConeMembership)->Unit(benchmark::kMillisecond);

static void BM_CofactorCase5(benchmark::State& state) {
  CofactorProblem p = cofactor_problem_case5();
  for (auto _ : state) benchmark::DoNotOptimize(find_cofactors(p.target, p.gens));
}
BENCHMARK(BM_CofactorCase5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
