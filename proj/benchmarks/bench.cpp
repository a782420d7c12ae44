#include <benchmark/benchmark.h>

#include "bosonhopf/expr.hpp"
#include "bosonhopf/hopf.hpp"
#include "bosonhopf/relations.hpp"
#include "bosonhopf/rmatrix.hpp"
#include "bosonhopf/structure.hpp"

using namespace bosonhopf;

namespace {

void BM_BuildRep(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_rep(AlgebraSpec::bq(2, 2, 1.3), d));
}
BENCHMARK(BM_BuildRep)->Arg(8)->Arg(16)->Arg(32);

void BM_DefiningRelations(benchmark::State& state) {
  const FockRep rep = build_rep(AlgebraSpec::h(1, 0.5, 0), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_defining_relations(rep, 1e-10));
}
BENCHMARK(BM_DefiningRelations)->Arg(16)->Arg(32);

void BM_HopfTables(benchmark::State& state) {
  const FockRep rep = build_rep(AlgebraSpec::h(1, 0.5, 0), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_tables(rep));
}
BENCHMARK(BM_HopfTables)->Arg(6)->Arg(8);

void BM_Coassociativity(benchmark::State& state) {
  const HopfTables t = build_tables(build_rep(AlgebraSpec::bq(2, 2, 1.3), static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(check_coassociativity(t, 1e-10));
}
BENCHMARK(BM_Coassociativity)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_BuildR(benchmark::State& state) {
  const FockRep rep = build_rep(AlgebraSpec::bq(2, 2, 1.3), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_r(rep));
}
BENCHMARK(BM_BuildR)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Ybe(benchmark::State& state) {
  const RMatrix r = build_r(build_rep(AlgebraSpec::bq(2, 2, 1.3), static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(check_ybe(r, 1e-8));
}
BENCHMARK(BM_Ybe)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Quasitriangularity(benchmark::State& state) {
  const FockRep rep = build_rep(AlgebraSpec::bq(2, 2, 1.3), 8);
  const HopfTables t = build_tables(rep);
  const RMatrix r = build_r(rep);
  for (auto _ : state) benchmark::DoNotOptimize(check_quasitriangularity(r, t, 1e-8));
}
BENCHMARK(BM_Quasitriangularity)->Unit(benchmark::kMillisecond);

void BM_ParseEvaluate(benchmark::State& state) {
  const FockRep rep = build_rep(AlgebraSpec::b(2, 1), 16);
  const EvalContext ctx = EvalContext::of(rep);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(*parse("acomm(a, ad) - (alpha*N + beta*I)"), ctx));
}
BENCHMARK(BM_ParseEvaluate);

void BM_Casimir(benchmark::State& state) {
  const RealizationMap r = build_realization(build_rep(AlgebraSpec::b(4, 1), 12), Target::sl2);
  for (auto _ : state) benchmark::DoNotOptimize(casimir_spectrum(r, CasimirKind::sl2_c2, 1e-10));
}
BENCHMARK(BM_Casimir);

}  // namespace

BENCHMARK_MAIN();
