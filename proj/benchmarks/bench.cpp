#include <benchmark/benchmark.h>

#include "eulercert/cocycle.hpp"
#include "eulercert/doubling.hpp"
#include "eulercert/explore.hpp"
#include "eulercert/surfrep.hpp"

namespace {

using namespace eulercert;

std::vector<std::pair<Mat2, Mat2>> bench_pairs() { return calibration_pair(); }

void BM_Psi(benchmark::State& state) {
  ProjPoint u = ProjPoint::finite(FieldElement(Rational(1, 3)));
  ProjPoint v = ProjPoint::finite(FieldElement(Rational(7, 2)));
  ProjPoint w = ProjPoint::infinity(FieldDesc::rational());
  for (auto _ : state) benchmark::DoNotOptimize(psi(u, v, w));
}
BENCHMARK(BM_Psi);

void BM_Ell(benchmark::State& state) {
  auto pairs = bench_pairs();
  ProjPoint p = default_base_point(FieldDesc::rational());
  for (auto _ : state)
    benchmark::DoNotOptimize(ell(pairs[0].first, pairs[0].second, p));
}
BENCHMARK(BM_Ell);

void BM_EulerNumber(benchmark::State& state) {
  SurfaceRep rep = double_pairs(bench_pairs());
  ProjPoint p = default_base_point(rep.field());
  for (auto _ : state) benchmark::DoNotOptimize(euler_number(rep, p));
}
BENCHMARK(BM_EulerNumber);

void BM_Doubling(benchmark::State& state) {
  auto pairs = bench_pairs();
  for (auto _ : state) benchmark::DoNotOptimize(run_doubling(pairs));
}
BENCHMARK(BM_Doubling);

void BM_SampleSl2(benchmark::State& state) {
  Rng rng(42);
  for (auto _ : state) benchmark::DoNotOptimize(sample_sl2(rng, 2));
}
BENCHMARK(BM_SampleSl2);

}  // namespace

BENCHMARK_MAIN();
