// Serial reference against the OpenMP kernels. Arg 0 is serial, otherwise the
// thread count.

#include <benchmark/benchmark.h>

#include "gfw/osc.hpp"
#include "gfw/theorems.hpp"

using namespace gfw;

namespace {

ExecPolicy policy_for(const benchmark::State& state) {
  return state.range(0) == 0 ? ExecPolicy::serial() : ExecPolicy::openmp(static_cast<int>(state.range(0)));
}

const GFCurve& curve53() {
  static const GFCurve c = GFCurve::validate(5, 3, {Rational(-1)});
  return c;
}

const GFCurve& curve34() {
  static const GFCurve c = GFCurve::validate(3, 4, {Rational(-1), Rational(2)});
  return c;
}

void BM_EvaluateForms(benchmark::State& state) {
  const GFCurve& curve = curve53();
  const GradedBasis basis = monomial_basis(curve, curve.canonical_twist());
  const int t = default_truncation(curve, basis.size());
  const LocalExpansion ex = local_expansion(curve, GenericFixed{3}, t);
  const ExecPolicy policy = policy_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_forms(basis, ex, policy));
}

void BM_PivotOrders(benchmark::State& state) {
  const GFCurve& curve = curve34();
  const GradedBasis basis = monomial_basis(curve, curve.canonical_twist());
  const int t = default_truncation(curve, basis.size());
  const FormMatrix m = evaluate_forms(basis, local_expansion(curve, GenericFixed{4}, t));
  const ExecPolicy policy = policy_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(pivot_orders(m, policy));
}

void BM_Profile(benchmark::State& state) {
  const GFCurve& curve = curve53();
  const GradedBasis basis = monomial_basis(curve, curve.canonical_twist());
  ProfileOptions opts;
  opts.policy = policy_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(profile(curve, basis, GenericFixed{3}, opts));
}

void BM_Strictness(benchmark::State& state) {
  const GFCurve& curve = curve34();
  ProfileOptions opts;
  opts.policy = policy_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(strictness_diagnostic(curve, GenericFixed{4}, opts));
}

}  // namespace

BENCHMARK(BM_EvaluateForms)->Arg(0)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PivotOrders)->Arg(0)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Profile)->Arg(0)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Strictness)->Arg(0)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
