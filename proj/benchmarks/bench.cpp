#include <benchmark/benchmark.h>

#include "finmod/classify.hpp"
#include "finmod/instance.hpp"

namespace {

const finmod::ModulePtr& z2xz8() {
  static finmod::ModulePtr m = finmod::zbackend_module({2, 8});
  return m;
}

void BM_submodule_lattice(benchmark::State& state) {
  for (auto _ : state) {
    auto l = finmod::all_submodules(z2xz8());
    benchmark::DoNotOptimize(l);
  }
}
BENCHMARK(BM_submodule_lattice);

void BM_endomorphism_ring(benchmark::State& state) {
  for (auto _ : state) {
    auto e = finmod::end_homs(z2xz8());
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_endomorphism_ring);

void BM_classify(benchmark::State& state) {
  for (auto _ : state) {
    auto r = finmod::classify(z2xz8(), "module zabelian 2 8", false);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_classify);

void BM_goldie_torsion(benchmark::State& state) {
  auto m = finmod::parse_spec("module regular (ring zmod 32)").module;
  for (auto _ : state) {
    auto t = finmod::goldie_torsion(m);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_goldie_torsion);

}  // namespace

BENCHMARK_MAIN();
