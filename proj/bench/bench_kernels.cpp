#include <benchmark/benchmark.h>

#include <random>

#include "adjrep/assoc.hpp"
#include "adjrep/fixtures.hpp"
#include "adjrep/kernels.hpp"
#include "adjrep/poly_matrix.hpp"
#include "adjrep/random_polytopes.hpp"

using namespace adjrep;

namespace {

const Poly& big_factor() {
  static const Poly p = universal_adjoint_assoc(8);
  return p;
}

void BM_MultiplySerial(benchmark::State& st) {
  const auto& a = big_factor().terms();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::multiply_serial(a, a));
}

void BM_MultiplyParallel(benchmark::State& st) {
  const auto& a = big_factor().terms();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::multiply_parallel(a, a));
}

const PolyMatrix& assoc_matrix() {
  static const PolyMatrix m = fixture_matrix("assoc-n6", "matrix");
  return m;
}

void BM_DetCofactorSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(det_cofactor(assoc_matrix()));
}

void BM_DetCofactorParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(det_cofactor_parallel(assoc_matrix()));
}

void BM_DetBareiss(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(det_bareiss(assoc_matrix()));
}

const HPolytope& random_polytope() {
  static const HPolytope p = [] {
    std::mt19937_64 rng(7);
    return random_simple_polytope3(12, rng);
  }();
  return p;
}

void BM_VerticesSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_vertices_serial(random_polytope()));
}

void BM_VerticesParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_vertices_parallel(random_polytope()));
}

}  // namespace

BENCHMARK(BM_MultiplySerial);
BENCHMARK(BM_MultiplyParallel);
BENCHMARK(BM_DetCofactorSerial);
BENCHMARK(BM_DetCofactorParallel);
BENCHMARK(BM_DetBareiss);
BENCHMARK(BM_VerticesSerial);
BENCHMARK(BM_VerticesParallel);

BENCHMARK_MAIN();
