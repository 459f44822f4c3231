#include <benchmark/benchmark.h>

#include "kul/expr.hpp"
#include "kul/lift.hpp"
#include "kul/replay.hpp"

using namespace kul;

namespace {

IntMatrix gram2(long a, long b, long c) { return IntMatrix{{a, b}, {b, c}}; }

void BM_PhiMatrix(benchmark::State& state) {
  const CoverSetup s = make_gm3_setup(gram2(10, 7, 2));
  for (auto _ : state) benchmark::DoNotOptimize(phi_matrix(s));
}
BENCHMARK(BM_PhiMatrix);

void BM_PhiOfExpression(benchmark::State& state) {
  const CoverSetup s = make_qds_setup(gram2(4, 1, -2));
  const GradedClass o_l = parse_class(s.source, "O_L");
  for (auto _ : state) benchmark::DoNotOptimize(phi_ch(s, o_l));
}
BENCHMARK(BM_PhiOfExpression);

void BM_ClosedFormLiftQds(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_lift_qds(7, -5));
}
BENCHMARK(BM_ClosedFormLiftQds);

void BM_ClosedFormLiftGm3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_lift_gm3(7, -5));
}
BENCHMARK(BM_ClosedFormLiftGm3);

void BM_BruteForceLift(benchmark::State& state) {
  const PhiMap map = phi_matrix(make_qds_setup(gram2(4, 1, -2)));
  const KnumClass v{"mu", to_int_vector({3, -2})};
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_lift(map, v, state.range(0)));
}
BENCHMARK(BM_BruteForceLift)->Arg(6)->Arg(12)->Arg(24);

void BM_AllLifts(benchmark::State& state) {
  const PhiMap map = phi_matrix(make_gm3_setup(gram2(10, 7, 2)));
  const KnumClass v{"kappa", to_int_vector({5, 3})};
  for (auto _ : state) benchmark::DoNotOptimize(all_lifts_inequality(map, v, default_box));
}
BENCHMARK(BM_AllLifts);

void BM_VerifyAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_reference_values());
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
