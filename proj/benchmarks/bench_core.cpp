#include <benchmark/benchmark.h>

#include "qdouble/algebra.hpp"
#include "qdouble/builtins.hpp"
#include "qdouble/cochain.hpp"
#include "qdouble/group.hpp"
#include "qdouble/groupoid.hpp"

using namespace qdouble;

namespace {

void BM_LoopGroupoid(benchmark::State& state) {
  const FiniteGroup g = build_symmetric(4);
  const Groupoid dl = delooping(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(loop_groupoid(dl));
  }
}
BENCHMARK(BM_LoopGroupoid)->Unit(benchmark::kMillisecond);

void BM_Transgress(benchmark::State& state) {
  const FiniteGroup g = builtins::make_group("product:cyclic:2,cyclic:2,cyclic:2");
  const Groupoid dl = delooping(g);
  const Cochain omega = builtins::make_cocycle("cocycle:z2cubed-omega", dl);
  const LoopGroupoid loop = loop_groupoid(dl);
  for (auto _ : state) {
    benchmark::DoNotOptimize(transgress(omega, loop));
  }
}
BENCHMARK(BM_Transgress)->Unit(benchmark::kMillisecond);

void BM_DrinfeldDouble(benchmark::State& state) {
  const FiniteGroup g = builtins::make_group("product:cyclic:2,cyclic:2,cyclic:2");
  const Groupoid dl = delooping(g);
  const Cochain omega = builtins::make_cocycle("cocycle:z2cubed-omega", dl);
  for (auto _ : state) {
    benchmark::DoNotOptimize(drinfeld_double(g, omega));
  }
}
BENCHMARK(BM_DrinfeldDouble)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  const FiniteGroup g = builtins::make_group("product:cyclic:2,cyclic:2,cyclic:2");
  const Groupoid dl = delooping(g);
  const Cochain omega = builtins::make_cocycle("cocycle:z2cubed-omega", dl);
  const DrinfeldDouble d = drinfeld_double(g, omega);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(d.algebra, 0));
  }
}
BENCHMARK(BM_Decompose)->Unit(benchmark::kMillisecond);

void BM_CenterDimension(benchmark::State& state) {
  const FiniteGroup g = builtins::make_group("product:cyclic:2,cyclic:2,cyclic:2");
  const Groupoid dl = delooping(g);
  const Cochain omega = builtins::make_cocycle("cocycle:z2cubed-omega", dl);
  const DrinfeldDouble d = drinfeld_double(g, omega);
  for (auto _ : state) {
    benchmark::DoNotOptimize(d.algebra.center_dimension());
  }
}
BENCHMARK(BM_CenterDimension)->Unit(benchmark::kMillisecond);

void BM_DoubleRankFormula(benchmark::State& state) {
  const FiniteGroup g = build_symmetric(3);
  const Groupoid dl = delooping(g);
  const Cochain trivial = Cochain::trivial(dl, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(double_rank_formula(g, trivial));
  }
}
BENCHMARK(BM_DoubleRankFormula)->Unit(benchmark::kMillisecond);

void BM_GroupCountFormula(benchmark::State& state) {
  const FiniteGroup g = builtins::make_group("product:cyclic:2,cyclic:2");
  const Groupoid dl = delooping(g);
  const Cochain theta = builtins::make_cocycle("cocycle:klein-thetaV", dl);
  for (auto _ : state) {
    benchmark::DoNotOptimize(group_count_formula(g, theta));
  }
}
BENCHMARK(BM_GroupCountFormula)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
