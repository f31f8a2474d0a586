// Microbenchmarks for the hot paths: Rees-ideal bases, Weyl products, the
// b-function pipeline, and the dimension oracles. Inputs are fixed small
// instances so runs are comparable across machines.

#include <benchmark/benchmark.h>

#include "reesd/oracles.hpp"
#include "reesd/parse.hpp"
#include "reesd/rees.hpp"

using namespace reesd;

namespace {

const std::vector<CommPoly>& running_example() {
  static const std::vector<CommPoly> f =
      parse_ideal_text("x^5\nx^2*y^3\ny^5\n", base_ring());
  return f;
}

const HilbertBurchData& hb_fixture() {
  static const HilbertBurchData hb = hilbert_burch(running_example());
  return hb;
}

const RestrictionSystem& sys_fixture(long p) {
  static const RestrictionSystem s2 = restriction_matrices(hb_fixture(), 2);
  static const RestrictionSystem s3 = restriction_matrices(hb_fixture(), 3);
  static const RestrictionSystem s4 = restriction_matrices(hb_fixture(), 4);
  return p == 2 ? s2 : (p == 3 ? s3 : s4);
}

WeylOp random_op(SplitMix64& rng, int nterms, int emax) {
  std::vector<WeylTerm> ts;
  for (int t = 0; t < nterms; ++t) {
    ExpVec e(kWeylVars);
    for (int v = 0; v < kWeylVars; ++v)
      e.set(v, static_cast<int>(rng.next() % static_cast<unsigned>(emax)));
    ts.push_back({e, Rational(rng.nonzero_in_band(9))});
  }
  return WeylOp(std::move(ts));
}

void BM_HilbertBurch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_burch(running_example()));
}
BENCHMARK(BM_HilbertBurch);

void BM_ReesIdealElimination(benchmark::State& state) {
  const auto& hb = hb_fixture();
  for (auto _ : state)
    benchmark::DoNotOptimize(rees_ideal(hb, ReesRoute::Elimination));
}
BENCHMARK(BM_ReesIdealElimination);

void BM_ReesIdealSaturation(benchmark::State& state) {
  const auto& hb = hb_fixture();
  for (auto _ : state)
    benchmark::DoNotOptimize(rees_ideal(hb, ReesRoute::Saturation));
}
BENCHMARK(BM_ReesIdealSaturation);

void BM_KTable(benchmark::State& state) {
  const auto& hb = hb_fixture();
  const auto req = rees_ideal(hb, ReesRoute::Saturation);
  for (auto _ : state)
    benchmark::DoNotOptimize(k_table(hb, req, state.range(0)));
}
BENCHMARK(BM_KTable)->Arg(3)->Arg(5);

void BM_WeylMul(benchmark::State& state) {
  SplitMix64 rng(99);
  const int nterms = static_cast<int>(state.range(0));
  WeylOp a = random_op(rng, nterms, 4), b = random_op(rng, nterms, 4);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_mul(a, b));
}
BENCHMARK(BM_WeylMul)->Arg(4)->Arg(16)->Arg(64);

void BM_RestrictionMatrices(benchmark::State& state) {
  const auto& hb = hb_fixture();
  for (auto _ : state)
    benchmark::DoNotOptimize(restriction_matrices(hb, state.range(0)));
}
BENCHMARK(BM_RestrictionMatrices)->Arg(3)->Arg(5);

void BM_ModuleBFunction(benchmark::State& state) {
  const long p = state.range(0);
  const auto& sys = sys_fixture(p);
  for (auto _ : state)
    benchmark::DoNotOptimize(module_bfunction(sys, 4 * (5 + p)));
}
BENCHMARK(BM_ModuleBFunction)->Arg(2)->Arg(3)->Arg(4);

void BM_HolonomicityCheck(benchmark::State& state) {
  const auto& sys = sys_fixture(3);
  for (auto _ : state) benchmark::DoNotOptimize(holonomicity_check(sys));
}
BENCHMARK(BM_HolonomicityCheck);

void BM_InversePolySolutions(benchmark::State& state) {
  const auto& hb = hb_fixture();
  for (auto _ : state)
    for (long q = 0; q <= 3; ++q)
      benchmark::DoNotOptimize(local_cohomology_solution_dim(hb, state.range(0), q));
}
BENCHMARK(BM_InversePolySolutions)->Arg(3)->Arg(5);

void BM_PolynomialSolutions(benchmark::State& state) {
  const auto& sys = sys_fixture(4);
  for (auto _ : state)
    for (long q = 0; q <= 3; ++q)
      benchmark::DoNotOptimize(polynomial_solution_dim(sys, q));
}
BENCHMARK(BM_PolynomialSolutions);

void BM_DualModuleDims(benchmark::State& state) {
  const auto& sys = sys_fixture(4);
  for (auto _ : state) benchmark::DoNotOptimize(dual_module_graded_dims(sys));
}
BENCHMARK(BM_DualModuleDims);

void BM_DeRhamTruncated(benchmark::State& state) {
  const auto& sys = sys_fixture(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(derham_h0_truncated(sys, state.range(0)));
}
BENCHMARK(BM_DeRhamTruncated)->Arg(7)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
