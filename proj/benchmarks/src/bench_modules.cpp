#include <benchmark/benchmark.h>

#include "ssiwasawa/modules.hpp"

namespace {

void BM_ModelSnf(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto model = ssiw::model_E_Ln(3, n);
    for (auto _ : state) benchmark::DoNotOptimize(ssiw::snf(model));
}
BENCHMARK(BM_ModelSnf)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ShaSize(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ssiw::sha_structure_size(3, n, 2));
}
BENCHMARK(BM_ShaSize)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_TraceKernel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ssiw::trace_kernel_cokernel(3, n));
}
BENCHMARK(BM_TraceKernel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

} // namespace
