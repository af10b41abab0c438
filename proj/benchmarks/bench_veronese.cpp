#include <benchmark/benchmark.h>

#include "wrl/rankcert/certify.hpp"

using wrl::exactmath::Rng;

namespace {

struct Sampled {
  wrl::veronese::PointConfiguration config;
  wrl::veronese::SymmetricForm form;
};

Sampled sampled(int m, int e, int a, int d, std::uint64_t seed) {
  Rng rng(seed);
  auto A = wrl::veronese::sample_configuration(m, e, a, rng.next(), 10);
  auto f = wrl::veronese::sample_in_span(A, d, rng.next(), 100);
  return {std::move(A), std::move(f)};
}

}  // namespace

static void BM_VeroneseEmbed(benchmark::State& state) {
  const int m = state.range(0), d = state.range(1);
  Rng rng(3);
  auto s = sampled(m, 0, 1, d, 17);
  for (auto _ : state)
    benchmark::DoNotOptimize(wrl::veronese::veronese_embed_weighted(s.config.pairs[0], d));
}
BENCHMARK(BM_VeroneseEmbed)->Args({2, 7})->Args({5, 12})->Args({6, 14});

static void BM_BorderRankLower(benchmark::State& state) {
  auto s = sampled(2, 2, 1, 7, 23);
  for (auto _ : state) benchmark::DoNotOptimize(wrl::veronese::border_rank_lower(s.form, 4));
}
BENCHMARK(BM_BorderRankLower);

static void BM_CertifiedRankW8(benchmark::State& state) {
  auto s = sampled(2, 2, 1, 7, 29);
  for (auto _ : state)
    benchmark::DoNotOptimize(wrl::rankcert::certified_rank_multi(s.form, s.config));
}
BENCHMARK(BM_CertifiedRankW8);

static void BM_ClassifySigma2(benchmark::State& state) {
  auto s = sampled(2, 0, 1, 7, 31);
  for (auto _ : state) benchmark::DoNotOptimize(wrl::veronese::classify_sigma2(s.form));
}
BENCHMARK(BM_ClassifySigma2);
