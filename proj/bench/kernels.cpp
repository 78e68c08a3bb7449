#include <benchmark/benchmark.h>

#include "fa/catalog.hpp"
#include "fa/mapping.hpp"
#include "fa/nerve.hpp"
#include "fa/ortho.hpp"
#include "fa/shapes.hpp"

namespace {

using namespace fa;

RelFA wright() { return find_catalog_entry("wright_triangle").relfa(); }

void BM_BoxslashSerial(benchmark::State& state) {
  auto f = wright();
  for (auto _ : state) benchmark::DoNotOptimize(boxslash_relation_serial(f));
}
BENCHMARK(BM_BoxslashSerial)->Unit(benchmark::kMillisecond);

void BM_BoxslashParallel(benchmark::State& state) {
  auto f = wright();
  for (auto _ : state) benchmark::DoNotOptimize(boxslash_relation(f));
}
BENCHMARK(BM_BoxslashParallel)->Unit(benchmark::kMillisecond);

const ShapeInclusion& box_shape() {
  static const ShapeInclusion s = make_shape("box(boundary[1],boundary[2])");
  return s;
}

void BM_LiftingSerial(benchmark::State& state) {
  auto x = nerve(to_relfa(boolean(2))).complex;
  for (auto _ : state) benchmark::DoNotOptimize(check_lifting_serial(box_shape(), x, LiftMode::Exists));
}
BENCHMARK(BM_LiftingSerial)->Unit(benchmark::kMillisecond);

void BM_LiftingParallel(benchmark::State& state) {
  auto x = nerve(to_relfa(boolean(2))).complex;
  for (auto _ : state) benchmark::DoNotOptimize(check_lifting(box_shape(), x, LiftMode::Exists));
}
BENCHMARK(BM_LiftingParallel)->Unit(benchmark::kMillisecond);

void BM_PMMorphismsSerial(benchmark::State& state) {
  auto e = boolean(3), f = zk_interval({1, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(pm_morphisms_serial(e, f));
}
BENCHMARK(BM_PMMorphismsSerial)->Unit(benchmark::kMillisecond);

void BM_PMMorphismsParallel(benchmark::State& state) {
  auto e = boolean(3), f = zk_interval({1, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(pm_morphisms(e, f));
}
BENCHMARK(BM_PMMorphismsParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
