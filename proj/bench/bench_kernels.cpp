// Serial reference against the OpenMP paths: sparse products, the harmonic
// basis and a full verification suite.

#include <benchmark/benchmark.h>

#include <random>

#include "sphalg/harmonic.hpp"
#include "sphalg/poly_kernels.hpp"
#include "sphalg/verify.hpp"

namespace {

using namespace sphalg;

Poly dense_poly(std::size_t dim, long deg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-9, 9);
  Poly p(dim);
  for (long d = 0; d <= deg; ++d) {
    for (const Monomial& m : monomials_of_degree(dim, d)) p.add_term(m, GaussianRational(coeff(rng)));
  }
  return p;
}

void BM_MultiplySerial(benchmark::State& state) {
  const Poly a = dense_poly(4, state.range(0), 1);
  const Poly b = dense_poly(4, state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply_serial(a, b));
  state.counters["terms"] = static_cast<double>(a.size());
}

void BM_MultiplyParallel(benchmark::State& state) {
  const Poly a = dense_poly(4, state.range(0), 1);
  const Poly b = dense_poly(4, state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply_parallel(a, b));
  state.counters["threads"] = kernels::max_threads();
}

void BM_HarmonicBasis(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(harmonic_basis(4, state.range(0)));
}

void BM_Suite(benchmark::State& state, const char* name, bool parallel) {
  const verify::Suite* suite = verify::find_suite(name);
  verify::Options opts;
  opts.parallel = parallel;
  for (auto _ : state) {
    const verify::SuiteResult r = verify::run_suite(*suite, opts);
    if (!r.passed()) state.SkipWithError("suite failed");
  }
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyParallel)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HarmonicBasis)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, decomposition_serial, "decomposition", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, decomposition_parallel, "decomposition", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, magic_serial, "magic", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, magic_parallel, "magic", true)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
