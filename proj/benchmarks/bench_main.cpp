#include <random>

#include <benchmark/benchmark.h>

#include "ybfox/fox.hpp"
#include "ybfox/presets.hpp"
#include "ybfox/solution.hpp"
#include "ybfox/wada.hpp"

namespace {

using namespace ybfox;

FreeWord random_word(std::mt19937& rng, const AlphabetPtr& alphabet, int len) {
  std::vector<Letter> raw;
  raw.reserve(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i)
    raw.push_back({static_cast<int>(rng() % static_cast<unsigned>(alphabet->size())),
                   rng() % 2 ? +1 : -1});
  return reduce(alphabet, raw);
}

void BM_WordMultiply(benchmark::State& state) {
  std::mt19937 rng(7);
  const auto& a2 = Alphabet::rank2();
  const FreeWord w1 = random_word(rng, a2, static_cast<int>(state.range(0)));
  const FreeWord w2 = random_word(rng, a2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply(w1, w2));
}
BENCHMARK(BM_WordMultiply)->Arg(16)->Arg(256)->Arg(4096);

void BM_FoxDerivative(benchmark::State& state) {
  std::mt19937 rng(11);
  const FreeWord w = random_word(rng, Alphabet::rank2(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fox_derivative(w, 0));
}
BENCHMARK(BM_FoxDerivative)->Arg(16)->Arg(64)->Arg(256);

void BM_RingMultiply(benchmark::State& state) {
  std::mt19937 rng(13);
  const auto& a2 = Alphabet::rank2();
  GroupRingElement e1 = GroupRingElement::zero(a2);
  GroupRingElement e2 = GroupRingElement::zero(a2);
  for (int i = 0; i < state.range(0); ++i) {
    e1 = add(e1, embed(random_word(rng, a2, 8)));
    e2 = add(e2, embed(random_word(rng, a2, 8)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(ring_multiply(e1, e2));
}
BENCHMARK(BM_RingMultiply)->Arg(4)->Arg(16)->Arg(64);

void BM_VerifyLemma1(benchmark::State& state) {
  const WadaPair p = parse_pair("x^-1 y^-1 x, y^2 x");
  for (auto _ : state) benchmark::DoNotOptimize(verify_lemma1(p));
}
BENCHMARK(BM_VerifyLemma1);

void BM_ExtendedSolution(benchmark::State& state) {
  const WadaPair p = parse_pair("y^-1, yxy");
  const Preset preset = parse_preset("S3:Z7sign");
  for (auto _ : state)
    benchmark::DoNotOptimize(extended_solution(p, preset.group, preset.module));
}
BENCHMARK(BM_ExtendedSolution);

void BM_CheckSybe(benchmark::State& state) {
  const WadaPair p = parse_pair("y^-1, yxy");
  const Preset preset = parse_preset(state.range(0) == 0 ? "C3:Z7x2" : "S3:Z7sign");
  const ExtendedSolution s = extended_solution(p, preset.group, preset.module);
  for (auto _ : state) benchmark::DoNotOptimize(check_sybe(s.map));
  state.SetItemsProcessed(state.iterations() * s.map.carrier * s.map.carrier * s.map.carrier);
}
BENCHMARK(BM_CheckSybe)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
