#include <benchmark/benchmark.h>

#include "apery/apery_table.hpp"
#include "apery/families.hpp"
#include "apery/ladder.hpp"
#include "apery/oracle.hpp"

namespace {

void BM_AperySetBresinsky(benchmark::State& state) {
  const auto p = apery::BresinskyParams::make(state.range(0));
  const std::vector<apery::Value> gens{p.m0, p.m1, p.m2, p.m3};
  for (auto _ : state) benchmark::DoNotOptimize(apery::new_semigroup(gens).apery());
}
BENCHMARK(BM_AperySetBresinsky)->DenseRange(2, 10, 2);

void BM_AperyTableBresinsky(benchmark::State& state) {
  const auto s = apery::bresinsky(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(apery::apery_table(s));
}
BENCHMARK(BM_AperyTableBresinsky)->DenseRange(2, 10, 2);

void BM_ClosedFormTableBresinsky(benchmark::State& state) {
  const auto p = apery::BresinskyParams::make(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(apery::family_table_closed_form(p));
}
BENCHMARK(BM_ClosedFormTableBresinsky)->DenseRange(2, 10, 2);

void BM_ConeDecompositionArslan(benchmark::State& state) {
  const auto s = apery::arslan(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(apery::cone_decomposition(s));
}
BENCHMARK(BM_ConeDecompositionArslan)->DenseRange(2, 16, 2);

void BM_FullVerify(benchmark::State& state) {
  const auto s = apery::arslan(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(apery::full_verify(s));
}
BENCHMARK(BM_FullVerify)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
