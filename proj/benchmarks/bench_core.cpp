#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "polyval/harness.hpp"

using namespace polyval;

namespace {

std::vector<Vec> random_points(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-6, 6);
  std::vector<Vec> pts(static_cast<std::size_t>(count), Vec::zero(n));
  for (auto& v : pts)
    for (int i = 0; i < n; ++i) v[i] = ratio(coord(rng), 2);
  return pts;
}

void BM_Hull(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto pts = random_points(n, static_cast<int>(state.range(1)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(Polytope::hull(pts));
}
BENCHMARK(BM_Hull)->Args({2, 8})->Args({2, 32})->Args({3, 8})->Args({3, 16})->Args({4, 8})->Args({4, 12});

void BM_FacetVector(benchmark::State& state) {
  const Polytope p = random_polytope(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(facet_vector(p, Zeta{1}));
}
BENCHMARK(BM_FacetVector)->DenseRange(2, 4);

void BM_Cut(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Polytope p = random_polytope(n, 13);
  Vec normal = Vec::ones(n);
  normal[0] = 2;
  const Hyperplane h(normal, dot(normal, p.vertices().front()) / 2 + dot(normal, p.vertices().back()) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(cut(p, h));
}
BENCHMARK(BM_Cut)->DenseRange(2, 4);

void BM_Moment(benchmark::State& state) {
  const Polytope p = random_polytope(static_cast<int>(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(moment(p));
}
BENCHMARK(BM_Moment)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
