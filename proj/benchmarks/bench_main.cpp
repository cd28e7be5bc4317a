#include "fvir/euler.hpp"
#include "fvir/solver.hpp"
#include "fvir/verify.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <memory>
#include <numbers>

namespace {

using fvir::Rational;

fvir::ExactAlgebraPtr z2(int eps) { return std::make_shared<const fvir::ExactAlgebra>(fvir::builtin_Z2(Rational(eps), 1)); }

void BM_VerifyBihamiltonianZ2(benchmark::State& state) {
  auto a = z2(2);
  for (auto _ : state) benchmark::DoNotOptimize(fvir::verify_bihamiltonian(a, a->unit(), a->unit(), a->unit()));
}
BENCHMARK(BM_VerifyBihamiltonianZ2)->Unit(benchmark::kMillisecond);

void BM_CocycleZ3(benchmark::State& state) {
  auto a = std::make_shared<const fvir::ExactAlgebra>(fvir::builtin_Zl_top(3));
  for (auto _ : state) benchmark::DoNotOptimize(fvir::verify_cocycle(a));
}
BENCHMARK(BM_CocycleZ3)->Unit(benchmark::kMillisecond);

void BM_BuildEquationN3(benchmark::State& state) {
  auto a = z2(1);
  for (auto _ : state) {
    auto eq = fvir::build_euler_equation(a, fvir::InertiaSpec{{a->unit(), a->unit(), a->unit(), a->unit()}}, a->unit());
    benchmark::DoNotOptimize(eq.rhs);
  }
}
BENCHMARK(BM_BuildEquationN3)->Unit(benchmark::kMillisecond);

template <fvir::Scheme S>
void BM_SolverStepZ2CH(benchmark::State& state) {
  auto a = z2(2);
  const auto n = std::size_t(state.range(0));
  auto eq = fvir::build_euler_equation(a, fvir::InertiaSpec::from_alpha_beta(a->unit(), a->unit()), a->unit());
  fvir::Solver solver(eq, n, 2 * std::numbers::pi, S);
  fvir::GridField u(n, 2, 2 * std::numbers::pi);
  for (std::size_t p = 0; p < n; ++p) {
    u(p, 0) = 0.3 * std::sin(u.x(p));
    u(p, 1) = 0.2 * std::cos(u.x(p));
  }
  solver.set_velocity(u);
  const double dt = std::min(1e-4, 0.5 * solver.max_explicit_dt());
  for (auto _ : state) solver.step(dt);
  state.SetItemsProcessed(state.iterations() * std::int64_t(n));
}
BENCHMARK(BM_SolverStepZ2CH<fvir::Scheme::RK4>)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_SolverStepZ2CH<fvir::Scheme::IFRK4>)->RangeMultiplier(4)->Range(64, 4096);

}  // namespace

BENCHMARK_MAIN();
