#include <benchmark/benchmark.h>

#include "tolspace/builders.hpp"
#include "tolspace/canonical.hpp"
#include "tolspace/homology.hpp"
#include "tolspace/hopf.hpp"
#include "tolspace/moves.hpp"
#include "tolspace/smith.hpp"
#include "tolspace/spheres.hpp"

using namespace tolspace;

namespace {

void BM_JoinHomology(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ToleranceSpace j = join(cycle(n, "x"), cycle(n, "y"));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology(j));
  state.SetLabel(std::to_string(j.size()) + " vertices");
}
BENCHMARK(BM_JoinHomology)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_CliqueComplex(benchmark::State& state) {
  const ToleranceSpace j = hopf_total();
  for (auto _ : state) benchmark::DoNotOptimize(clique_complex(j).f_vector());
}
BENCHMARK(BM_CliqueComplex)->Unit(benchmark::kMillisecond);

void BM_SmithBoundary(benchmark::State& state) {
  const SparseMatrix d = clique_complex(hopf_total()).boundary(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form_checked(d));
}
BENCHMARK(BM_SmithBoundary)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

// Fresh context per iteration so memo hits do not flatter the numbers.
void BM_LinkContractible(benchmark::State& state) {
  const ToleranceSpace j = hopf_total();
  const ToleranceSpace lk = link(j, state.range(0) == 0 ? "(x1,B)" : "(x1,y1)");
  for (auto _ : state) {
    SearchContext ctx;
    benchmark::DoNotOptimize(is_simple_contractible(lk, ctx));
  }
  state.SetLabel(std::to_string(lk.size()) + "-vertex link");
}
BENCHMARK(BM_LinkContractible)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ReduceCore(benchmark::State& state) {
  const ToleranceSpace lk = link(hopf_total(), "(x1,B)");
  for (auto _ : state) {
    SearchContext ctx;
    benchmark::DoNotOptimize(reduce_core(lk, ctx));
  }
}
BENCHMARK(BM_ReduceCore)->Unit(benchmark::kMillisecond);

void BM_HomologySphere3(benchmark::State& state) {
  const ToleranceSpace j = hopf_total();
  for (auto _ : state) {
    SearchContext ctx;
    benchmark::DoNotOptimize(is_digital_homology_sphere(j, 3, {}, ctx));
  }
}
BENCHMARK(BM_HomologySphere3)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const ToleranceSpace x = state.range(0) == 0 ? link(hopf_total(), "(x1,B)") : hopf_total();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(x.graph()));
  state.SetLabel(std::to_string(x.size()) + " vertices");
}
BENCHMARK(BM_CanonicalForm)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_CycleStretch(benchmark::State& state) {
  const ToleranceSpace a = cycle(4), b = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_equivalent(a, b));
}
BENCHMARK(BM_CycleStretch)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_HopfBundle(benchmark::State& state) {
  for (auto _ : state) {
    SearchContext ctx;
    benchmark::DoNotOptimize(verify_hopf_bundle(ctx));
  }
}
BENCHMARK(BM_HopfBundle)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
