#include <benchmark/benchmark.h>

#include "weddle/cubic.hpp"
#include "weddle/tensor.hpp"
#include "weddle/weddle.hpp"

using namespace weddle;

namespace {

RatMatrix fixture_M() {
  return RatMatrix::from_rows({{1, 0, 1, 1}, {1, 2, 0, 1}, {0, 1, -1, 1}, {1, 0, 1, 0}});
}

}  // namespace

static void BM_Decompose(benchmark::State& state) {
  const Tensor3 t = random_n1(static_cast<std::size_t>(state.range(0)), 1) +
                    sym_part(random_n1(static_cast<std::size_t>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(t));
}
BENCHMARK(BM_Decompose)->DenseRange(2, 6);

static void BM_WeddleDet(benchmark::State& state) {
  const LinearSystem s = LinearSystem::from_tensor(random_n1(static_cast<std::size_t>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(weddle_matrix(s));
}
BENCHMARK(BM_WeddleDet)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_Rank5Determinant(benchmark::State& state) {
  const RatMatrix m = fixture_M();
  for (auto _ : state) benchmark::DoNotOptimize(rank5_determinant(m));
}
BENCHMARK(BM_Rank5Determinant);

static void BM_BasePoints(benchmark::State& state) {
  const LinearSystem s = LinearSystem::from_tensor(random_n1(static_cast<std::size_t>(state.range(0)), 4));
  for (auto _ : state) benchmark::DoNotOptimize(base_points(s));
}
BENCHMARK(BM_BasePoints)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_Rank5SingularPoints(benchmark::State& state) {
  const MultiPoly f = rank5_determinant(fixture_M());
  for (auto _ : state) benchmark::DoNotOptimize(singular_points(f));
}
BENCHMARK(BM_Rank5SingularPoints)->Unit(benchmark::kMillisecond);

static void BM_JInvariant(benchmark::State& state) {
  const MultiPoly f = parse_poly("x0*x1*x2 - x0^2*x1 - x0*x1^2 - x0^2*x2 - x0*x2^2 + x1^2*x2 + x1*x2^2", 3);
  const bool numeric = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(j_invariant(f, {}, numeric));
}
BENCHMARK(BM_JInvariant)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
