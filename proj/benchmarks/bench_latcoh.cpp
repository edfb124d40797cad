#include <benchmark/benchmark.h>

#include <random>

#include "latcoh/complex.hpp"
#include "latcoh/gf2.hpp"
#include "latcoh/homology.hpp"
#include "latcoh/les.hpp"
#include "latcoh/property_suites.hpp"
#include "latcoh/region.hpp"
#include "latcoh/triangle.hpp"

using namespace latcoh;

namespace {

PlumbingGraph named(const std::string& name) {
  for (auto& n : bundled_corpus())
    if (n.name == name) return n.graph;
  throw std::runtime_error("no corpus graph " + name);
}

void BM_BuildComplexE8(benchmark::State& state) {
  const Lattice l(named("e8"));
  const Int mcap = state.range(0);
  const Region region = truncation_region(l, Coords(8, 0), mcap);
  BuildOptions options;
  options.gcap = mcap;
  for (auto _ : state) {
    auto c = build_complex(l, region, options);
    benchmark::DoNotOptimize(c.basis.data());
    state.counters["basis"] = static_cast<double>(c.size());
  }
}
BENCHMARK(BM_BuildComplexE8)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_HomologySigma237(benchmark::State& state) {
  const Lattice l(named("sigma237"));
  const Int mcap = state.range(0);
  const Region region = truncation_region(l, {1, 0, 1, 1}, mcap);
  BuildOptions options;
  options.gcap = mcap;
  const auto c = build_complex(l, region, options);
  for (auto _ : state) {
    Homology h(c);
    benchmark::DoNotOptimize(h.total_dim(0));
  }
  state.counters["basis"] = static_cast<double>(c.size());
}
BENCHMARK(BM_HomologySigma237)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_StabilizeE8(benchmark::State& state) {
  const Lattice l(named("e8"));
  for (auto _ : state) benchmark::DoNotOptimize(stabilize(l, Coords(8, 0), 0, 2).stabilized);
}
BENCHMARK(BM_StabilizeE8)->Unit(benchmark::kMillisecond);

void BM_EchelonRandom(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  std::mt19937_64 rng(5);
  std::vector<SparseVec> cols(n);
  for (auto& c : cols) {
    for (int k = 0; k < 6; ++k) c.push_back(static_cast<std::uint32_t>(rng() % n));
    c = normalized(c);
  }
  for (auto _ : state) benchmark::DoNotOptimize(rank(cols));
}
BENCHMARK(BM_EchelonRandom)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_VerifySes(benchmark::State& state) {
  const auto ctx = TriangleContext::make(named("star3"), 0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_ses(ctx).passed());
}
BENCHMARK(BM_VerifySes)->Unit(benchmark::kMillisecond);

void BM_LesStar(benchmark::State& state) {
  const auto ctx = TriangleContext::make(named("star3"), 0);
  for (auto _ : state) benchmark::DoNotOptimize(les_check(ctx, 3).exact());
}
BENCHMARK(BM_LesStar)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
