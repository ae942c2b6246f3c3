#include <benchmark/benchmark.h>

#include "aspec/harness.hpp"
#include "aspec/invert.hpp"
#include "aspec/omega.hpp"
#include "aspec/seminorm.hpp"
#include "aspec/spectrum.hpp"

using namespace aspec;

namespace {

harness::Instance instance(Index dim) {
  harness::RandomInstanceSpec spec;
  spec.dim = dim;
  spec.rank = dim / 2 + 1;
  spec.seed = 42;
  return harness::generate_instance(spec);
}

void BM_PsdDecompose(benchmark::State& state) {
  const harness::Instance inst = instance(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psd_decompose(inst.a));
}
BENCHMARK(BM_PsdDecompose)->RangeMultiplier(2)->Range(4, 128);

void BM_Seminorm(benchmark::State& state) {
  const harness::Instance inst = instance(state.range(0));
  const PsdDecomposition d = psd_decompose(inst.a);
  for (auto _ : state) benchmark::DoNotOptimize(a_seminorm(d, inst.x));
}
BENCHMARK(BM_Seminorm)->RangeMultiplier(2)->Range(4, 128);

void BM_AInvertible(benchmark::State& state) {
  const harness::Instance inst = instance(state.range(0));
  const PsdDecomposition d = psd_decompose(inst.a);
  for (auto _ : state) benchmark::DoNotOptimize(a_invertible(d, inst.x));
}
BENCHMARK(BM_AInvertible)->RangeMultiplier(2)->Range(4, 128);

void BM_ASpectrum(benchmark::State& state) {
  const harness::Instance inst = instance(state.range(0));
  const PsdDecomposition d = psd_decompose(inst.a);
  for (auto _ : state) benchmark::DoNotOptimize(a_spectrum(d, inst.x));
}
BENCHMARK(BM_ASpectrum)->RangeMultiplier(2)->Range(4, 128);

void BM_Gelfand256(benchmark::State& state) {
  const harness::Instance inst = instance(state.range(0));
  const PsdDecomposition d = psd_decompose(inst.a);
  for (auto _ : state) benchmark::DoNotOptimize(gelfand_sequence(d, inst.x, 256));
}
BENCHMARK(BM_Gelfand256)->Arg(4)->Arg(8)->Arg(32);

void BM_NumericalRange(benchmark::State& state) {
  const harness::Instance inst = instance(8);
  const PsdDecomposition d = psd_decompose(inst.a);
  const auto directions = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(a_numerical_range(d, inst.x, directions));
}
BENCHMARK(BM_NumericalRange)->Arg(90)->Arg(360)->Arg(720);

void BM_OmegaClassify(benchmark::State& state) {
  const omega::OmegaElement a = omega::example_weight();
  const omega::OmegaElement x = omega::example_identity_function();
  for (auto _ : state) benchmark::DoNotOptimize(omega::a_inverse_classify(a, x));
}
BENCHMARK(BM_OmegaClassify);

void BM_PropertyTrial(benchmark::State& state) {
  harness::SuiteConfig config;
  config.trials = 1;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    config.seed = seed++;
    benchmark::DoNotOptimize(harness::run_property_suite(config));
  }
}
BENCHMARK(BM_PropertyTrial)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
