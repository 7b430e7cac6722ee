#include <benchmark/benchmark.h>

#include "torsionlab/json_io.hpp"

using namespace torsionlab;

static RingPtr load(const char* f) {
  return load_ring(std::string(TORSIONLAB_DATA_DIR) + "/" + f);
}

static void BM_EnumerateRightIdeals(benchmark::State& state) {
  auto R = load("t2f2.json");
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_ideals(*R, Side::Right));
}
BENCHMARK(BM_EnumerateRightIdeals);

static void BM_EnumerateFilters(benchmark::State& state) {
  auto R = load("t2f2.json");
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_gabriel_filters(R, Side::Right));
}
BENCHMARK(BM_EnumerateFilters);

static void BM_HomSet(benchmark::State& state) {
  auto R = load("t2f2.json");
  auto M = ring_as_right_module(R);
  auto L2 = submodule_as_module(M, Subset{0, 2, 4, 6}).module;
  for (auto _ : state) benchmark::DoNotOptimize(hom_set(L2, M));
}
BENCHMARK(BM_HomSet);

static void BM_SmithNormalForm(benchmark::State& state) {
  Mat A = {{6, 4, 2, 0}, {4, 6, 2, 2}, {2, 2, 4, 8}, {0, 2, 8, 6}};
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(A));
}
BENCHMARK(BM_SmithNormalForm);

static void BM_RingOfQuotients(benchmark::State& state) {
  auto R = load("t2f2.json");
  auto F = lambek_filter(R, Side::Right);
  for (auto _ : state) benchmark::DoNotOptimize(ring_of_quotients(F));
}
BENCHMARK(BM_RingOfQuotients);

static void BM_EnvelopingRing(benchmark::State& state) {
  auto R = load("t2f2.json");
  for (auto _ : state) benchmark::DoNotOptimize(tensor_ring(R, R));
}
BENCHMARK(BM_EnvelopingRing);

BENCHMARK_MAIN();
