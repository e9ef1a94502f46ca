#include <benchmark/benchmark.h>

#include <random>

#include "rahecke/ktheory.hpp"
#include "rahecke/presentations.hpp"
#include "rahecke/traces.hpp"

using namespace rahecke;

namespace {

std::shared_ptr<const CoxeterSystem> pentagon() {
  static auto sys = std::make_shared<const CoxeterSystem>(presentations::pentagon());
  return sys;
}

ContextPtr pentagon_q4() {
  static auto ctx = ParamContext::iwahori_uniform(pentagon(), 2);
  return ctx;
}

std::vector<Word> random_words(std::size_t n, std::size_t len) {
  std::mt19937_64 rng(1);
  std::vector<Word> out(n);
  for (auto& w : out) {
    for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<GeneratorId>(rng() % 5));
  }
  return out;
}

void BM_Normalize(benchmark::State& state) {
  auto sys = pentagon();
  auto words = random_words(256, static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sys->normalize(words[i++ % words.size()]));
}
BENCHMARK(BM_Normalize)->Arg(8)->Arg(32)->Arg(128);

void BM_Ball(benchmark::State& state) {
  auto sys = pentagon();
  for (auto _ : state) benchmark::DoNotOptimize(sys->ball(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Ball)->DenseRange(4, 8, 2);

void BM_MulBasis(benchmark::State& state) {
  auto ctx = pentagon_q4();
  auto b = ctx->system().ball(static_cast<std::size_t>(state.range(0)));
  std::mt19937_64 rng(2);
  for (auto _ : state) {
    const Elem& w = b[rng() % b.size()];
    const Elem& x = b[rng() % b.size()];
    benchmark::DoNotOptimize(mul(t_basis(ctx, w), t_basis(ctx, x)));
  }
}
BENCHMARK(BM_MulBasis)->Arg(3)->Arg(5);

void BM_CocentreImage(benchmark::State& state) {
  auto ctx = pentagon_q4();
  auto b = ctx->system().ball(static_cast<std::size_t>(state.range(0)));
  TraceEngine te(ctx);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(te.cocentre_image(t_basis(ctx, b[i++ % b.size()])));
}
BENCHMARK(BM_CocentreImage)->Arg(4)->Arg(6);

void BM_PairingMatrix(benchmark::State& state) {
  auto ctx = pentagon_q4();
  for (auto _ : state) benchmark::DoNotOptimize(pairing_matrix(ctx));
}
BENCHMARK(BM_PairingMatrix);

}  // namespace

BENCHMARK_MAIN();
