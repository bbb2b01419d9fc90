// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "kohn/genfun.hpp"
#include "kohn/groups.hpp"
#include "kohn/harmonic.hpp"
#include "kohn/search.hpp"

using namespace kohn;

namespace {

const harmonic::Quotient& lens_quotient() {
  static const harmonic::Quotient q = lens::LensSpace(97, {1, 12, 45, 71});
  return q;
}

const harmonic::Quotient& group_quotient() {
  static const harmonic::Quotient q =
      groups::type_one_group(groups::TypeIParams::make(11, 25, 3), 1, 1);
  return q;
}

void BM_DimTableLensSerial(benchmark::State& state) {
  const int b = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(harmonic::dim_table_reference(lens_quotient(), b, b));
}

void BM_DimTableLensParallel(benchmark::State& state) {
  const int b = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(harmonic::dim_table(lens_quotient(), b, b));
}

void BM_DimTableGroupSerial(benchmark::State& state) {
  const int b = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(harmonic::dim_table_reference(group_quotient(), b, b));
}

void BM_DimTableGroupParallel(benchmark::State& state) {
  const int b = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(harmonic::dim_table(group_quotient(), b, b));
}

void BM_NumeratorReference(benchmark::State& state) {
  const lens::LensSpace L(state.range(0), {1, 3, 5});
  for (auto _ : state) benchmark::DoNotOptimize(genfun::p_poly_direct_reference(L));
}

void BM_NumeratorGrouped(benchmark::State& state) {
  const lens::LensSpace L(state.range(0), {1, 3, 5});
  for (auto _ : state) benchmark::DoNotOptimize(genfun::p_poly_direct(L));
}

void BM_SearchSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search::search_isospectral_serial(4, state.range(0), false));
}

void BM_SearchParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search::search_isospectral(4, state.range(0), {0, false}));
}

}  // namespace

BENCHMARK(BM_DimTableLensSerial)->Arg(40)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DimTableLensParallel)->Arg(40)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DimTableGroupSerial)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DimTableGroupParallel)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NumeratorReference)->Arg(17)->Arg(29)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NumeratorGrouped)->Arg(17)->Arg(29)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchSerial)->Arg(49)->Arg(81)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Arg(49)->Arg(81)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
