// Serial reference vs OpenMP kernels, plus the field and curve primitives
// they are built on.

#include <benchmark/benchmark.h>

#include "zkec/curve.hpp"
#include "zkec/parallel.hpp"
#include "zkec/rng.hpp"
#include "zkec/session.hpp"

using namespace zkec;

namespace {

FieldElement some_element(std::uint64_t seed) {
  const Curve& c = default_curve();
  SeededRng rng(seed);
  return c.mul(Scalar::random(c.order(), rng), c.generator()).x();
}

void BM_FieldMul(benchmark::State& state) {
  FieldElement a = some_element(1);
  const FieldElement b = some_element(2);
  for (auto _ : state) {
    a *= b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul);

void BM_FieldInverse(benchmark::State& state) {
  const FieldElement a = some_element(3);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_FieldInverse);

void BM_ScalarMul(benchmark::State& state) {
  const Curve& c = default_curve();
  SeededRng rng(4);
  const Scalar k = Scalar::random(c.order(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(c.mul(k, c.generator()));
}
BENCHMARK(BM_ScalarMul)->Unit(benchmark::kMicrosecond);

std::vector<Scalar> scalars(std::size_t n) {
  const Curve& c = default_curve();
  SeededRng rng(5);
  std::vector<Scalar> ks;
  for (std::size_t i = 0; i < n; ++i) ks.push_back(Scalar::random(c.order(), rng));
  return ks;
}

void BM_BatchMulSerial(benchmark::State& state) {
  const auto ks = scalars(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(batch_mul_serial(default_curve(), ks, default_curve().generator()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BatchMulSerial)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_BatchMulOpenMP(benchmark::State& state) {
  const auto ks = scalars(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(batch_mul(default_curve(), ks, default_curve().generator()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BatchMulOpenMP)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();

TrialOutcome schnorr_trial(std::uint64_t seed) {
  SessionConfig cfg;
  cfg.framed = false;
  const auto run = run_seeded_session(default_curve(), Protocol::kSchnorr, cfg, seed);
  return {run.result.verdict.accept, run.result.verdict.reason, run.result.prover, run.result.verifier};
}

void BM_TrialsSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_trials_serial(n, 1, schnorr_trial));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TrialsSerial)->Arg(32)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_TrialsOpenMP(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_trials(n, 1, schnorr_trial));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TrialsOpenMP)->Arg(32)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
