#include "cyclocover/fermat.hpp"
#include "cyclocover/group_ring.hpp"
#include "cyclocover/lattice.hpp"
#include "cyclocover/linalg.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace cyclocover;

namespace {

IntMatrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

void BM_Hermite(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hermite(m));
}
BENCHMARK(BM_Hermite)->Arg(16)->Arg(32)->Arg(64);

void BM_Smith(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(smith_invariants(m));
}
BENCHMARK(BM_Smith)->Arg(16)->Arg(32)->Arg(64);

void BM_IdealBasis(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const auto phi = group_ring::phi(d, n);
  for (auto _ : state) benchmark::DoNotOptimize(group_ring::ideal_basis(phi));
}
BENCHMARK(BM_IdealBasis)->Args({3, 2})->Args({3, 3})->Args({5, 2})->Args({4, 3});

void BM_VerifyMain(benchmark::State& state) {
  const fermat::FermatCase c{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  for (auto _ : state) {
    fermat::Workspace ws(c.d);
    benchmark::DoNotOptimize(fermat::verify_main(c, ws));
  }
}
BENCHMARK(BM_VerifyMain)->Args({2, 3})->Args({3, 3})->Args({4, 3})->Args({3, 5})->Unit(benchmark::kMillisecond);

void BM_WeylE6(benchmark::State& state) {
  const auto l = lattice::root_lattice("E6", -1);
  for (auto _ : state) benchmark::DoNotOptimize(lattice::weyl_image_order(l, 3));
}
BENCHMARK(BM_WeylE6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
