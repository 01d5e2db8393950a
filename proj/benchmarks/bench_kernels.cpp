#include <benchmark/benchmark.h>

#include "gds/gds.hpp"

namespace {

using gds::Matrix;

void BM_MatMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = gds::random_matrix(n, 1);
  const Matrix b = gds::random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(gds::mat_mul(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MatMul)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);

void BM_QrHouseholder(benchmark::State& state) {
  const Matrix x = gds::random_matrix(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(gds::qr_householder(x));
}
BENCHMARK(BM_QrHouseholder)->RangeMultiplier(2)->Range(16, 256);

void BM_SpectralNorm(benchmark::State& state) {
  const Matrix x = gds::random_matrix(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(gds::spectral_norm(x));
}
BENCHMARK(BM_SpectralNorm)->RangeMultiplier(2)->Range(16, 256);

void BM_ExtendToUnBasis(benchmark::State& state) {
  const Matrix x = gds::random_matrix(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(gds::extend_to_un_basis(x));
}
BENCHMARK(BM_ExtendToUnBasis)->RangeMultiplier(2)->Range(16, 256);

void BM_BuildGdsFromBlock(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix q = gds::extend_to_un_basis(gds::random_matrix(n, 6));
  const Matrix w = gds::qr_householder(gds::random_matrix(n - 1, 7)).q;
  for (auto _ : state) benchmark::DoNotOptimize(gds::build_gds_from_block(q, w));
}
BENCHMARK(BM_BuildGdsFromBlock)->RangeMultiplier(2)->Range(16, 256);

}  // namespace

BENCHMARK_MAIN();
