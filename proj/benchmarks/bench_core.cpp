#include <benchmark/benchmark.h>

#include "bour/bour_maximal.hpp"
#include "bour/catalog.hpp"
#include "bour/diffgeo.hpp"
#include "bour/meshio.hpp"
#include "bour/patches.hpp"
#include "bour/timelike.hpp"
#include "bour/weierstrass.hpp"

namespace {

void BM_ClosedFormSpacelike(benchmark::State& state) {
  double r = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bour::bour_closed_form(3.0, {r, 1.2}));
    r = r < 0.9 ? r + 1e-4 : 0.1;
  }
}
BENCHMARK(BM_ClosedFormSpacelike);

void BM_ClosedFormTimelike(benchmark::State& state) {
  const bour::NullData data = bour::NullData::bour(4.0);
  double u = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bour::magid_immersion(data, {u, 0.7}));
    u = u < 1.9 ? u + 1e-4 : 0.1;
  }
}
BENCHMARK(BM_ClosedFormTimelike);

void BM_OracleFormSample(benchmark::State& state) {
  const bour::SurfacePatch patch = bour::make_patch(*bour::find_by_label("b3"));
  for (auto _ : state)
    benchmark::DoNotOptimize(bour::fundamental_forms(patch, 0.5, 0.8));
}
BENCHMARK(BM_OracleFormSample);

void BM_ScanFp64(benchmark::State& state) {
  const bour::SurfacePatch patch = bour::make_patch(*bour::find_by_label("b3"));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(bour::scan(patch, n, n, {}, bour::Precision::Fp64));
}
BENCHMARK(BM_ScanFp64)->Arg(16)->Arg(32);

#ifdef BOUR_HAVE_FLOAT128
void BM_ScanFp128(benchmark::State& state) {
  const bour::SurfacePatch patch = bour::make_patch(*bour::find_by_label("b3"));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(bour::scan(patch, n, n, {}, bour::Precision::Fp128));
}
BENCHMARK(BM_ScanFp128)->Arg(16)->Arg(32);
#endif

void BM_Quadrature(benchmark::State& state) {
  const bour::WeierstrassData data = bour::WeierstrassData::bour(3.0);
  const bour::ComplexParam base = bour::default_base(data.exponent);
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(bour::integrate_numeric(data, {0.8, 2.0}, base, steps));
}
BENCHMARK(BM_Quadrature)->Arg(64)->Arg(512);

void BM_MeshSample(benchmark::State& state) {
  const auto entry = *bour::find_by_label("b4");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bour::sample(entry, n, n));
}
BENCHMARK(BM_MeshSample)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
