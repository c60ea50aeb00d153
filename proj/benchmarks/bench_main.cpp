#include <benchmark/benchmark.h>

#include "apolar/apolarity.hpp"
#include "apolar/groebner.hpp"
#include "apolar/obstruction.hpp"
#include "apolar/structure.hpp"

using namespace apolar;

namespace {

DualGenerator sample_F() { return build_F(canonical_cubic(Cubic::CuspA), BVector{1, 0, 1, 0, 1, 0}); }

void BM_Annihilator(benchmark::State& state) {
  const DualGenerator f = sample_F();
  for (auto _ : state) benchmark::DoNotOptimize(annihilator(f));
}
BENCHMARK(BM_Annihilator)->Unit(benchmark::kMillisecond);

void BM_GroebnerJ(benchmark::State& state) {
  const Ideal j = annihilator(sample_F());
  const TermOrder ord = TermOrder::product(4);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_groebner(j.generators(), ord));
}
BENCHMARK(BM_GroebnerJ)->Unit(benchmark::kMillisecond);

void BM_TangentData(benchmark::State& state) {
  const DualGenerator f = sample_F();
  for (auto _ : state) benchmark::DoNotOptimize(tangent_data(f, 11));
}
BENCHMARK(BM_TangentData)->Unit(benchmark::kMillisecond);

// Mixed quadric y2*y3 - 2*y4^2 added, so the normalizer has work to do.
void BM_Normalize(benchmark::State& state) {
  const Poly g = sample_F().poly() + parse_poly("y2*y3 - 2*y4^2", 4, Side::Y);
  for (auto _ : state) benchmark::DoNotOptimize(normalize_2stretched(DualGenerator(g)));
}
BENCHMARK(BM_Normalize)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
