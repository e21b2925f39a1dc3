// Microbenchmarks for the hot paths: single pair averages, whole refinement
// rounds, and the margin function scanned by the validator.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "hermite/bezier.hpp"
#include "hermite/lemma.hpp"
#include "hermite/subdivision.hpp"
#include "hermite/types.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

hermite::HermiteSequence circle_samples(int n) {
  std::vector<hermite::HermitePair> pairs;
  pairs.reserve(std::size_t(n));
  for (int j = 0; j < n; ++j) {
    const double phi = 2.0 * kPi * j / n;
    pairs.emplace_back(hermite::Vec{std::cos(phi), std::sin(phi)},
                       hermite::UnitVec(hermite::Vec{-std::sin(phi), std::cos(phi)}));
  }
  return hermite::HermiteSequence(pairs, hermite::Topology::Closed);
}

void BM_MidpointAverage(benchmark::State& state) {
  const hermite::HermiteSequence s = circle_samples(2);
  const hermite::HermitePair a = s[0];
  const hermite::HermitePair b = s[1];
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermite::midpoint_average(a, b));
  }
}
BENCHMARK(BM_MidpointAverage);

void BM_WeightedAverage(benchmark::State& state) {
  const hermite::HermiteSequence s = circle_samples(2);
  const hermite::HermitePair a = s[0];
  const hermite::HermitePair b = s[1];
  double w = 0.125;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermite::average(a, b, w));
    w = w < 0.875 ? w + 0.125 : 0.125;
  }
}
BENCHMARK(BM_WeightedAverage);

void BM_InterpolatoryStep(benchmark::State& state) {
  const hermite::HermiteSequence s = circle_samples(int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermite::ihb_step(s, hermite::AlphaVariant::SumAngle));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_InterpolatoryStep)->Arg(16)->Arg(256)->Arg(4096);

void BM_SmoothingStep(benchmark::State& state) {
  const hermite::HermiteSequence s = circle_samples(int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hermite::hb_lr_step(s, 3, hermite::AlphaVariant::SumAngle));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SmoothingStep)->Arg(16)->Arg(256)->Arg(4096);

void BM_RefinePipeline(benchmark::State& state) {
  const hermite::HermiteSequence s = circle_samples(8);
  hermite::RefineConfig cfg;
  cfg.levels = int(state.range(0));
  cfg.record_drift = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermite::refine(s, cfg));
  }
}
BENCHMARK(BM_RefinePipeline)->Arg(4)->Arg(8);

void BM_MarginValue(benchmark::State& state) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> angle(0.0, kPi / 2);
  std::vector<hermite::AngleTriple> triples(1024);
  for (auto& t : triples) {
    const double a = angle(rng);
    const double b = angle(rng);
    t = {a, b, std::min(a + b, kPi)};
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermite::d_value(triples[i]));
    i = (i + 1) & 1023;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_MarginValue);

}  // namespace

BENCHMARK_MAIN();
