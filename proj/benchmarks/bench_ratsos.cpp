#include <benchmark/benchmark.h>

#include "ratsos/descent.hpp"
#include "ratsos/fiedler.hpp"
#include "ratsos/pipeline.hpp"
#include "ratsos/problem.hpp"
#include "ratsos/tracefact.hpp"

namespace {

using namespace ratsos;

const char* kCubicTrace = R"(
field t : t^3 - 3*t + 1
vars x y
mode trace
term 1 : x^3 + t^2*y + (2 - t - t^2)*x*y^2 - 1
)";

const char* kCubicSum = R"(
field t : t^3 - 3*t + 1
vars x y
mode sum
term 1 : x^3 + t^2*y + (2 - t - t^2)*x*y^2 - 1
term 1 : x^3 + (2 - t - t^2)^2*y + (t^2 - 2)*x*y^2 - 1
term 1 : x^3 + (t^2 - 2)^2*y + t*x*y^2 - 1
)";

void BM_RationalizeCubicTrace(benchmark::State& state) {
  const auto problem = parse_problem(kCubicTrace);
  RationalizeOptions options;
  options.nodes = std::vector<Rat>{0, 1, 2};
  options.skip_lagrange = state.range(0) == 0;
  for (auto _ : state) benchmark::DoNotOptimize(rationalize(problem, options));
}
BENCHMARK(BM_RationalizeCubicTrace)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_RationalizeCubicSum(benchmark::State& state) {
  const auto problem = parse_problem(kCubicSum);
  for (auto _ : state) benchmark::DoNotOptimize(rationalize(problem));
}
BENCHMARK(BM_RationalizeCubicSum)->Unit(benchmark::kMicrosecond);

void BM_FourSquare(benchmark::State& state) {
  Integer n;
  mpz_ui_pow_ui(n.get_mpz_t(), 10, static_cast<unsigned long>(state.range(0)));
  n += 12345;
  for (auto _ : state) benchmark::DoNotOptimize(four_square(n));
}
BENCHMARK(BM_FourSquare)->Arg(4)->Arg(12)->Arg(24)->Arg(48);

void BM_IsolateRealRoots(benchmark::State& state) {
  std::vector<Rat> roots;
  for (long k = 0; k < state.range(0); ++k) roots.emplace_back(2 * k - state.range(0), 3);
  const UniPoly u = UniPoly::from_roots(roots);
  for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(u));
}
BENCHMARK(BM_IsolateRealRoots)->DenseRange(2, 8, 2);

void BM_TraceFactorization(benchmark::State& state) {
  std::vector<Rat> roots;
  for (long k = 0; k < state.range(0); ++k) roots.emplace_back(k * k + k + 1, 2);
  const UniPoly u = UniPoly::from_roots(roots);
  for (auto _ : state) benchmark::DoNotOptimize(build_trace_factorization(fiedler_data(u)));
}
BENCHMARK(BM_TraceFactorization)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
