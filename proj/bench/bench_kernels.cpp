// Serial reference kernels against their OpenMP counterparts.
// FIALG_THREADS caps the thread count of the parallel runs.

#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "fialg/identities.hpp"
#include "fialg/jordan.hpp"

using namespace fialg;

namespace {

PosetPtr bench_poset(std::size_t n) { return std::make_shared<const Poset>(random_poset(n, 1, 2, 7)); }

void convolution(benchmark::State& state, Exec exec) {
  const auto p = bench_poset(static_cast<std::size_t>(state.range(0)));
  std::mt19937_64 gen(1);
  const FinSeries f = random_series(p, RingSpec::rationals(), gen, 0.8);
  const FinSeries g = random_series(p, RingSpec::rationals(), gen, 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(f, g, exec));
}

void jordan_check(benchmark::State& state, Exec exec) {
  const auto fi = to_struct_algebra(bench_poset(static_cast<std::size_t>(state.range(0))), RingSpec::modular(9));
  const LinMap phi = random_jordan_iso(*fi, 3, {.rebase_codomain = true});
  for (auto _ : state) benchmark::DoNotOptimize(check_jordan(phi, {.exec = exec}));
}

void identity_suite(benchmark::State& state, Exec exec) {
  const auto fi = to_struct_algebra(bench_poset(static_cast<std::size_t>(state.range(0))), RingSpec::rationals());
  const JordanIso iso(fi, random_jordan_iso(*fi, 3), {.exec = exec});
  for (auto _ : state) benchmark::DoNotOptimize(verify_identities(iso, {.exec = exec}));
}

}  // namespace

BENCHMARK_CAPTURE(convolution, serial, Exec::serial)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK_CAPTURE(convolution, parallel, Exec::parallel)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK_CAPTURE(jordan_check, serial, Exec::serial)->Arg(5)->Arg(7);
BENCHMARK_CAPTURE(jordan_check, parallel, Exec::parallel)->Arg(5)->Arg(7);
BENCHMARK_CAPTURE(identity_suite, serial, Exec::serial)->Arg(5);
BENCHMARK_CAPTURE(identity_suite, parallel, Exec::parallel)->Arg(5);

int main(int argc, char** argv) {
  configure_threads_from_env();
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
