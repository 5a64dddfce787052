#include <benchmark/benchmark.h>

#include <random>

#include "collatz/characteristics.hpp"
#include "collatz/trajectory.hpp"

namespace {

using namespace collatz;

ParityVector random_bits(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = rng() & 1;
  return ParityVector(std::move(bits));
}

void BM_SolveN0(benchmark::State& state) {
  const auto v = random_bits(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_n0(v));
}
BENCHMARK(BM_SolveN0)->RangeMultiplier(4)->Range(16, 4096);

void BM_CharSet(benchmark::State& state) {
  const auto v = random_bits(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(char_set(v));
}
BENCHMARK(BM_CharSet)->RangeMultiplier(4)->Range(16, 4096);

void BM_XStar(benchmark::State& state) {
  const auto v = random_bits(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(xstar_decompose(v));
}
BENCHMARK(BM_XStar)->RangeMultiplier(4)->Range(16, 1024);

// Rows per second of the incremental builder.
void BM_Trajectory(benchmark::State& state) {
  const auto spec = GeneratorSpec::from_integer(Int(27));
  const auto h = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t rows = 0;
    for_each_row(spec, h, [&](const TrajectoryRow& r) { benchmark::DoNotOptimize(r.N0); ++rows; });
    benchmark::DoNotOptimize(rows);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Trajectory)->RangeMultiplier(4)->Range(64, 1024);

}  // namespace

BENCHMARK_MAIN();
