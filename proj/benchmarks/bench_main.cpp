#include <benchmark/benchmark.h>

#include "pdo/catalog.hpp"
#include "pdo/darboux.hpp"
#include "pdo/gcd.hpp"
#include "pdo/operator_algebra.hpp"
#include "pdo/resultant.hpp"

using namespace pdo;

namespace {

void BM_ComposeLeibniz(benchmark::State& st) {
  const DiffOp a = DiffOp::partial(2, 1, 2) + DiffOp::partial(2, 2, 2);
  const DiffOp b = DiffOp::monomial(2, {0, 1}, RatFun(MultiPoly::var(x_var(1)))) +
                   DiffOp::monomial(2, {1, 0}, RatFun(MultiPoly::var(x_var(2))));
  for (auto _ : st) benchmark::DoNotOptimize(compose(a, b));
}
BENCHMARK(BM_ComposeLeibniz);

void BM_ComposeExampleLK(benchmark::State& st) {
  const auto ex = build_example_K();
  for (auto _ : st) benchmark::DoNotOptimize(compose(ex.L, ex.K));
}
BENCHMARK(BM_ComposeExampleLK)->Unit(benchmark::kMicrosecond);

void BM_PolyGcd(benchmark::State& st) {
  const MultiPoly x = MultiPoly::var(x_var(1));
  const MultiPoly y = MultiPoly::var(x_var(2));
  const MultiPoly l = MultiPoly::var(lambda_var());
  const MultiPoly g = (x * y - l).pow(static_cast<unsigned>(st.range(0)));
  const MultiPoly a = g * (x + y + 1);
  const MultiPoly b = g * (x - l * y);
  for (auto _ : st) benchmark::DoNotOptimize(poly_gcd(a, b));
}
BENCHMARK(BM_PolyGcd)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_BuildResultantMatrix(benchmark::State& st) {
  const auto ops = catalog::wave_boost_triple();
  for (auto _ : st) benchmark::DoNotOptimize(build_resultant_matrix(ops, 2));
}
BENCHMARK(BM_BuildResultantMatrix)->Unit(benchmark::kMillisecond);

void BM_BareissMinor(benchmark::State& st) {
  const auto m = build_resultant_matrix(catalog::wave_boost_triple(), 2);
  RowSelection rows;
  for (std::size_t i = 0; i < 13; ++i) rows.push_back(i);
  rows.push_back(16);
  rows.push_back(17);
  for (auto _ : st) benchmark::DoNotOptimize(minor_value(m, rows));
}
BENCHMARK(BM_BareissMinor)->Unit(benchmark::kMillisecond);

void BM_RankKleinGordon(benchmark::State& st) {
  ResultantOptions o;
  o.mode = ResultantMode::RankOnly;
  const auto ops = catalog::klein_gordon_triple();
  for (auto _ : st) benchmark::DoNotOptimize(differential_resultant(ops, 2, o));
}
BENCHMARK(BM_RankKleinGordon)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_SampledResultant(benchmark::State& st) {
  ResultantOptions o;
  o.mode = ResultantMode::Sampled;
  o.samples = 40;
  o.workers = static_cast<unsigned>(st.range(0));
  const auto ops = catalog::wave_boost_triple();
  for (auto _ : st) benchmark::DoNotOptimize(differential_resultant(ops, 2, o));
}
BENCHMARK(BM_SampledResultant)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
