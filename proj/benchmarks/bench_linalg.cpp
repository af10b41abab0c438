#include <benchmark/benchmark.h>

#include "wrl/exactmath/matrix.hpp"
#include "wrl/exactmath/rng.hpp"

using wrl::exactmath::Matrix;
using wrl::exactmath::Rational;
using wrl::exactmath::Rng;

namespace {

Matrix<Rational> random_matrix(std::size_t rows, std::size_t cols, long height, std::uint64_t seed) {
  Rng rng(seed);
  Matrix<Rational> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = Rational(rng.uniform(-height, height), 1 + rng.uniform(0, 9));
  return m;
}

}  // namespace

static void BM_FractionFreeRank(benchmark::State& state) {
  const std::size_t n = state.range(0);
  auto m = random_matrix(n, n, 1000, 42);
  for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_FractionFreeRank)->Arg(8)->Arg(16)->Arg(32);

static void BM_RightKernel(benchmark::State& state) {
  const std::size_t n = state.range(0);
  // rank-deficient: n x (n + 4)
  auto m = random_matrix(n, n + 4, 1000, 7);
  for (auto _ : state) benchmark::DoNotOptimize(m.right_kernel());
}
BENCHMARK(BM_RightKernel)->Arg(8)->Arg(16)->Arg(32);

static void BM_SpanSolve(benchmark::State& state) {
  const std::size_t b = state.range(0);
  const std::size_t n = 2000;
  Rng rng(11);
  std::vector<std::vector<Rational>> vecs(b, std::vector<Rational>(n));
  for (auto& v : vecs)
    for (auto& x : v) x = Rational(rng.uniform(-50, 50));
  std::vector<Rational> target(n, Rational(0));
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t t = 0; t < n; ++t) target[t] += Rational(long(i) + 1) * vecs[i][t];
  for (auto _ : state) benchmark::DoNotOptimize(wrl::exactmath::span_solve(vecs, target));
}
BENCHMARK(BM_SpanSolve)->Arg(4)->Arg(7);
