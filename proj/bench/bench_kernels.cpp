// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include <numeric>

#include "fixerlab/group.hpp"

using namespace fixerlab;

namespace {

PermGroup symmetric(size_t n) {
  std::vector<Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Point(0));
  PermGroup G(n, {Perm::from_cycles(n, {{0, 1}}), Perm::from_cycles(n, {cycle})});
  G.enumerate();
  return G;
}

const PermGroup &s8() {
  static PermGroup G = symmetric(8);
  return G;
}

void BM_Classes(benchmark::State &st) {
  bool parallel = st.range(0);
  for (auto _ : st) benchmark::DoNotOptimize(compute_classes(s8(), parallel));
}
BENCHMARK(BM_Classes)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State &st) {
  bool parallel = st.range(0);
  for (auto _ : st) {
    PermGroup G(8, s8().generators());
    G.enumerate(kEnumerationBound, parallel);
    benchmark::DoNotOptimize(G.order());
  }
}
BENCHMARK(BM_Enumerate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Lattice(benchmark::State &st) {
  static PermGroup G = symmetric(6);
  LatticeOptions opt;
  opt.parallel = st.range(0);
  for (auto _ : st) benchmark::DoNotOptimize(subgroups_up_to_conjugacy(G, opt));
}
BENCHMARK(BM_Lattice)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
