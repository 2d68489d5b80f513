#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "lexistat/distance.hpp"
#include "lexistat/phylo.hpp"
#include "lexistat/rng.hpp"
#include "lexistat/simulate.hpp"
#include "lexistat/stability.hpp"

namespace {

using namespace lexistat;

std::u32string random_word(Rng& rng, std::size_t len) {
  std::u32string word(len, U'a');
  for (auto& c : word) c = static_cast<char32_t>(U'a' + rng.uniform_below(26));
  return word;
}

void BM_Levenshtein(benchmark::State& state) {
  Rng rng(1, 0);
  const auto len = static_cast<std::size_t>(state.range(0));
  std::vector<std::u32string> words;
  for (int i = 0; i < 256; ++i) words.push_back(random_word(rng, len));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        levenshtein(words[i & 255], words[(i + 1) & 255]));
    ++i;
  }
}
BENCHMARK(BM_Levenshtein)->Arg(4)->Arg(8)->Arg(16);

SimResult desk_scale_family(double rate) {
  SimConfig config;
  config.n_languages = 50;
  config.n_meanings = 200;
  config.rates.assign(200, rate);
  config.mutation_rate = 0.1;
  config.min_word_length = 7;
  config.max_word_length = 9;
  config.seed = 11;
  return evolve(config);
}

void BM_DistanceMatrix(benchmark::State& state) {
  SimResult family = desk_scale_family(1e9);
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        distance_matrix(family.dataset, SynonymPolicy::First, threads));
  }
}
BENCHMARK(BM_DistanceMatrix)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_StabilityAll(benchmark::State& state) {
  SimResult family = desk_scale_family(0.5);
  StabilityOptions options;
  options.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(stability_all(family.dataset, options));
  }
}
BENCHMARK(BM_StabilityAll)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Upgma(benchmark::State& state) {
  SimResult family = desk_scale_family(0.5);
  DistanceMatrix matrix = distance_matrix(family.dataset, SynonymPolicy::First, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(upgma(matrix));
  }
}
BENCHMARK(BM_Upgma)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
