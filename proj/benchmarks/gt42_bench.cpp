// Microbenchmarks for the hot paths: minor extraction, stratum classification,
// moment evaluation, orbit parameters, stabilizers, and the homology engine.

#include <benchmark/benchmark.h>

#include <vector>

#include "gt42/frame.hpp"
#include "gt42/moment.hpp"
#include "gt42/orbits.hpp"
#include "gt42/random.hpp"
#include "gt42/strata.hpp"
#include "gt42/topo.hpp"

namespace {

using namespace gt42;

std::vector<Frame<Complex>> sample_frames(int n) {
  Rng rng(7);
  std::vector<Frame<Complex>> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(random_frame<Complex>(rng));
  return out;
}

void BM_plucker_coordinates(benchmark::State& state) {
  const auto frames = sample_frames(256);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(plucker_coordinates(frames[i++ % frames.size()]));
  }
}
BENCHMARK(BM_plucker_coordinates);

void BM_stratum_classification(benchmark::State& state) {
  const auto frames = sample_frames(256);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(stratum_of(frames[i++ % frames.size()]));
  }
}
BENCHMARK(BM_stratum_classification);

void BM_moment_map(benchmark::State& state) {
  const auto frames = sample_frames(256);
  std::vector<Plucker<Complex>> ps;
  ps.reserve(frames.size());
  for (const auto& f : frames) ps.push_back(plucker_coordinates(f));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(moment_g42(ps[i++ % ps.size()]));
  }
}
BENCHMARK(BM_moment_map);

void BM_cross_ratio(benchmark::State& state) {
  Rng rng(7);
  std::vector<Frame<Complex>> frames;
  for (int i = 0; i < 256; ++i) frames.push_back(random_main_stratum_frame<Complex>(rng));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cross_ratio(frames[i++ % frames.size()]));
  }
}
BENCHMARK(BM_cross_ratio);

void BM_stabilizer_subtorus(benchmark::State& state) {
  const auto& table = admissible_table();
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(stabilizer_subtorus(table[i++ % table.size()].vertices));
  }
}
BENCHMARK(BM_stabilizer_subtorus);

void BM_cellular_homology(benchmark::State& state) {
  const ChainComplex model = build_g42_orbit_space_model();
  for (auto _ : state) {
    benchmark::DoNotOptimize(cellular_homology(model));
  }
}
BENCHMARK(BM_cellular_homology);

}  // namespace

BENCHMARK_MAIN();
