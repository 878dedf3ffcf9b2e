#include <benchmark/benchmark.h>

#include "nodal/bound_engine.hpp"
#include "nodal/linear_code.hpp"
#include "nodal/surface.hpp"

namespace {

// Simplex codes: 2^k words of length 2^k - 1.
void BM_WeightDistribution(benchmark::State& state) {
  const nodal::LinearCode code = nodal::simplex_code_from_columns(static_cast<std::size_t>(state.range(0)));
  const nodal::EnumerationOptions options{30, static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(nodal::weight_distribution(code, options));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_WeightDistribution)->ArgsProduct({{10, 14}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_DualCode(benchmark::State& state) {
  const nodal::LinearCode code = nodal::togliatti_code();
  for (auto _ : state) benchmark::DoNotOptimize(nodal::dual_code(code));
}
BENCHMARK(BM_DualCode);

void BM_DeriveAllGaps(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nodal::derive_all_gaps(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_DeriveAllGaps)->Arg(1)->Arg(4);

void BM_ValidateCertificate(benchmark::State& state) {
  const auto cert = nodal::derive_gaps(10, nodal::EvenSetParity::strict);
  for (auto _ : state) benchmark::DoNotOptimize(nodal::validate(cert));
}
BENCHMARK(BM_ValidateCertificate);

}  // namespace

BENCHMARK_MAIN();
