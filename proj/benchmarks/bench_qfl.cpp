#include <benchmark/benchmark.h>

#include "qfl/families.hpp"
#include "qfl/fourier.hpp"
#include "qfl/hyper_verify.hpp"
#include "qfl/qcalc.hpp"

namespace {

void BM_QBinomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qfl::q_binomial(n, n / 2));
}
BENCHMARK(BM_QBinomial)->Arg(8)->Arg(16)->Arg(24);

void BM_QFibRecurrence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qfl::q_family_recurrence(qfl::FamilyKind::QFib, n));
}
BENCHMARK(BM_QFibRecurrence)->Arg(8)->Arg(16)->Arg(20);

void BM_QFibExplicit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qfl::q_family_explicit(qfl::FamilyKind::QFib, n));
}
BENCHMARK(BM_QFibExplicit)->Arg(8)->Arg(16)->Arg(20);

void BM_LittleQJacobiRelations(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const qfl::Rational q0(2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(qfl::little_qjacobi_relation_status(n, q0));
}
BENCHMARK(BM_LittleQJacobiRelations)->Arg(4)->Arg(10);

void BM_GaussSecondSummation(benchmark::State& state) {
  for (auto _ : state) {
    for (int l = 0; l <= 12; ++l) {
      benchmark::DoNotOptimize(qfl::verify_gauss_second_summation(l, 12, qfl::GaussVariant::A));
    }
  }
}
BENCHMARK(BM_GaussSecondSummation);

void BM_QuadratureRule(benchmark::State& state) {
  const int count = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qfl::QuadratureRule(count));
}
BENCHMARK(BM_QuadratureRule)->Arg(96)->Arg(128)->Arg(256);

void BM_FourierCase(benchmark::State& state) {
  const qfl::QuadratureRule rule(128);
  const auto c = qfl::FourierCase::make(qfl::FamilyKind::QLucas, static_cast<int>(state.range(0)), 2, -2, 0.64, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(qfl::evaluate_fourier_case(c, rule, 1e-8));
}
BENCHMARK(BM_FourierCase)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
