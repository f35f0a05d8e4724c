#include "nilsys/bch.hpp"
#include "nilsys/bounds.hpp"
#include "nilsys/catalog.hpp"
#include "nilsys/lattice.hpp"
#include "nilsys/solid.hpp"

#include <benchmark/benchmark.h>

using namespace nilsys;

namespace {

void BM_LowerBoundWitt(benchmark::State &state) {
  LieAlgebra a = catalog::build("witt", {{"n", state.range(0)}});
  Setup s = prepare(a);
  for (auto _ : state)
    benchmark::DoNotOptimize(lower_bound_exponent(s).h);
}
BENCHMARK(BM_LowerBoundWitt)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_BoundReport(benchmark::State &state) {
  LieAlgebra a = catalog::build("central_product", {{"k", 4}, {"n", state.range(0)}});
  for (auto _ : state)
    benchmark::DoNotOptimize(bound_report(a).upper.h);
}
BENCHMARK(BM_BoundReport)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_BchProduct(benchmark::State &state) {
  LieAlgebra a = catalog::build("witt", {{"n", state.range(0)}});
  Vector x, y;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    x.emplace_back(static_cast<long>(i % 3) - 1, 2);
    y.emplace_back(static_cast<long>(i % 5) - 2, 3);
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(bch_product(a, x, y));
}
BENCHMARK(BM_BchProduct)->Arg(5)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_Systole(benchmark::State &state) {
  LieAlgebra a = catalog::build("filiform7");
  Setup s = prepare(a);
  UpperBound u = upper_bound_exponent(s);
  AdditiveLattice l = build_diagonal_lattice(s, u.theta, state.range(0)).lattice;
  for (auto _ : state)
    benchmark::DoNotOptimize(systole(l, s.frame.weights).length);
}
BENCHMARK(BM_Systole)->Arg(4)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_SolidClosure(benchmark::State &state) {
  LieAlgebra a = catalog::build("central_product", {{"k", state.range(0)}, {"n", 1}});
  for (auto _ : state)
    benchmark::DoNotOptimize(solid_flags(a).size());
}
BENCHMARK(BM_SolidClosure)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
