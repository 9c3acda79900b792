#include <benchmark/benchmark.h>

#include "pgc/bounds.hpp"
#include "pgc/decimal.hpp"
#include "pgc/eval.hpp"
#include "pgc/pipeline.hpp"

namespace {

const pgc::Rational& budget() {
  static const pgc::Rational b(pgc::Int(1), pgc::pow10(13));
  return b;
}

void BM_ExpPointDegree12(benchmark::State& state) {
  pgc::Rational x = pgc::parse_decimal("0.48968967248");
  for (auto _ : state) benchmark::DoNotOptimize(pgc::exp_point(x, 12));
}
BENCHMARK(BM_ExpPointDegree12);

void BM_LogPoint(benchmark::State& state) {
  pgc::Rational x = pgc::Rational(1) + pgc::gn::t_minus();
  for (auto _ : state) benchmark::DoNotOptimize(pgc::log_point(x, budget()));
}
BENCHMARK(BM_LogPoint);

void BM_SqrtPoint(benchmark::State& state) {
  pgc::Rational x = pgc::Rational(3) * pgc::gn::t_minus() + 1;
  for (auto _ : state) benchmark::DoNotOptimize(pgc::sqrt_point(x, budget()));
}
BENCHMARK(BM_SqrtPoint);

void BM_PolySignBracket(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        pgc::poly_sign(pgc::gn::dY_num(), pgc::gn::reference_bracket(), 60));
}
BENCHMARK(BM_PolySignBracket);

void BM_EvalYAtEndpoint(benchmark::State& state) {
  pgc::Interval at(pgc::gn::t_minus());
  for (auto _ : state)
    benchmark::DoNotOptimize(pgc::eval(pgc::FunctionId::Y, at));
}
BENCHMARK(BM_EvalYAtEndpoint);

void BM_B0UniformBound(benchmark::State& state) {
  pgc::BoundConfig cfg;
  for (auto _ : state)
    for (const auto& plan : pgc::gn::b0_plan())
      benchmark::DoNotOptimize(
          pgc::summand_uniform_bound(plan, pgc::gn::reference_bracket(), cfg));
}
BENCHMARK(BM_B0UniformBound);

void BM_ComputeAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pgc::compute_all());
}
BENCHMARK(BM_ComputeAll)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
