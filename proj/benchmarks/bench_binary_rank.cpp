#include <benchmark/benchmark.h>

#include "wrl/binaryforms/binary_rank.hpp"
#include "wrl/binaryforms/witness.hpp"
#include "wrl/exactmath/rng.hpp"

using wrl::binaryforms::BinaryForm;
using wrl::exactmath::GaussianRational;
using wrl::exactmath::Rational;
using wrl::exactmath::Rng;

namespace {

BinaryForm random_form(int d, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Rational> plain(d + 1);
  for (auto& x : plain) x = Rational(rng.uniform(-50, 50));
  if (plain[0].is_zero()) plain[0] = Rational(1);
  return BinaryForm::from_plain(d, plain);
}

}  // namespace

static void BM_ComplexRank(benchmark::State& state) {
  auto f = random_form(state.range(0), 5);
  for (auto _ : state) benchmark::DoNotOptimize(wrl::binaryforms::complex_rank(f));
}
BENCHMARK(BM_ComplexRank)->Arg(6)->Arg(10)->Arg(14);

static void BM_RealRank(benchmark::State& state) {
  auto f = random_form(state.range(0), 9);
  for (auto _ : state) benchmark::DoNotOptimize(wrl::binaryforms::real_rank(f));
}
BENCHMARK(BM_RealRank)->Arg(6)->Arg(9)->Arg(12);

static void BM_WitnessRankD(benchmark::State& state) {
  GaussianRational c(Rational(3), Rational(-2));
  for (auto _ : state)
    benchmark::DoNotOptimize(wrl::binaryforms::witness_rank_d(state.range(0), c));
}
BENCHMARK(BM_WitnessRankD)->Arg(6)->Arg(10)->Arg(14);

static void BM_SplitNodeWitness(benchmark::State& state) {
  auto f = random_form(state.range(0), 13);
  for (auto _ : state) benchmark::DoNotOptimize(wrl::binaryforms::totally_split_apolar(f));
}
BENCHMARK(BM_SplitNodeWitness)->Arg(8)->Arg(14);
