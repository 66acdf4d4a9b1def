#include "chowstab/builtins.hpp"
#include "chowstab/hilbert.hpp"
#include "chowstab/localization.hpp"
#include "chowstab/polytope.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace chowstab;

const Fan& np_fan() {
  static const Fan fan = build_fan(builtin_polytope("nill-paffenholz"));
  return fan;
}

void BM_BuildFan(benchmark::State& state) {
  const FanoPolytope polytope = builtin_polytope("nill-paffenholz");
  for (auto _ : state) benchmark::DoNotOptimize(build_fan(polytope));
}
BENCHMARK(BM_BuildFan)->Unit(benchmark::kMillisecond);

void BM_PolarDual(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(polar_dual(np_fan()));
}
BENCHMARK(BM_PolarDual)->Unit(benchmark::kMillisecond);

void BM_ObstructionForm(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(f_td(np_fan(), p));
}
BENCHMARK(BM_ObstructionForm)->Arg(2)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_HilbertDerivative(benchmark::State& state) {
  const DualPolytope dual = polar_dual(np_fan());
  const ToricDiagram diagram = toric_diagram(np_fan().polytope, dual);
  LatticeVector n;
  for (int i = 1; i <= 7; ++i) n.emplace_back(i);
  const auto terms = brion_terms(diagram, dual, n);
  for (auto _ : state) benchmark::DoNotOptimize(specialized_series_and_derivative(terms, n));
}
BENCHMARK(BM_HilbertDerivative)->Unit(benchmark::kMillisecond);

void BM_LaurentAtXi(benchmark::State& state) {
  const DualPolytope dual = polar_dual(np_fan());
  const ToricDiagram diagram = toric_diagram(np_fan().polytope, dual);
  std::vector<Rational> b;
  for (int i = 1; i <= 7; ++i) b.push_back(make_rational(Int(i), Int(64)));
  for (auto _ : state) benchmark::DoNotOptimize(laurent_at_xi(diagram, dual, b, 9));
}
BENCHMARK(BM_LaurentAtXi)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
