#include <benchmark/benchmark.h>

#include <random>

#include "ainfty/builders.hpp"
#include "ainfty/kappa.hpp"
#include "ainfty/metrics.hpp"
#include "ainfty/reduction.hpp"
#include "ainfty/transfer.hpp"
#include "generators.hpp"

using namespace ainfty;

namespace {

FilteredComplex make_complex(int n_top) {
  std::mt19937_64 rng(42);
  return testgen::random_complex(rng, 10, 3, n_top, 5, true);
}

PersistenceDiagram make_diagram(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  PersistenceDiagram d;
  for (int i = 0; i < n; ++i) {
    DiagramPoint pt;
    pt.birth = FiltValue::of_rational(testgen::random_rational(rng, 20, 4));
    Rational b;
    pt.birth.is_rational(&b);
    pt.death = FiltValue::of_rational(b + Rational(1 + rng() % 12, 1 + rng() % 3));
    d.points.push_back(pt);
  }
  return d;
}

void bm_reduce(benchmark::State& state) {
  auto k = make_complex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduce(k, 2));
  state.SetLabel(std::to_string(k.size()) + " cells");
}

void bm_contraction(benchmark::State& state) {
  auto k = make_complex(static_cast<int>(state.range(0)));
  FiltValue t = k.grades().back();
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(build_contraction(k, t, 2, seed++));
  state.SetLabel(std::to_string(k.size()) + " cells");
}

void bm_transfer(benchmark::State& state) {
  auto k = make_complex(12);
  auto c = build_contraction(k, k.grades().back(), 2, 7);
  int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(transfer_delta(c, n_max));
}

void bm_kappa_module(benchmark::State& state) {
  auto k = make_complex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kappa_module(k, 2, 2, 2));
}

void bm_bottleneck(benchmark::State& state) {
  auto d1 = make_diagram(1, static_cast<int>(state.range(0)));
  auto d2 = make_diagram(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bottleneck(d1, d2));
}

void bm_cech(benchmark::State& state) {
  std::mt19937_64 rng(9);
  auto pts = testgen::random_cloud(rng, static_cast<int>(state.range(0)), 2, 12, 3);
  auto pc = PointCloud::from_coords(pts);
  for (auto _ : state)
    benchmark::DoNotOptimize(cech_filtration(pc, 2, FiltValue::of_int(40)));
}

}  // namespace

BENCHMARK(bm_reduce)->Arg(8)->Arg(16)->Arg(24);
BENCHMARK(bm_contraction)->Arg(8)->Arg(16)->Arg(24);
BENCHMARK(bm_transfer)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK(bm_kappa_module)->Arg(8)->Arg(16);
BENCHMARK(bm_bottleneck)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_cech)->Arg(10)->Arg(16);

BENCHMARK_MAIN();
