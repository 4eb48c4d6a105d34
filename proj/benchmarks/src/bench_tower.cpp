#include <benchmark/benchmark.h>

#include "ssiwasawa/tower.hpp"

namespace {

void BM_TowerBuild(benchmark::State& state) {
    const int level = static_cast<int>(state.range(0));
    const ssiw::PadicContext ctx(3, 8);
    const auto f = ssiw::good_frobenius_lift(ctx, 3);
    for (auto _ : state) benchmark::DoNotOptimize(ssiw::TowerRing::build(f, level, 6));
}
BENCHMARK(BM_TowerBuild)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

// Galois action: all conjugates of e_n over Q_p
void BM_Conjugates(benchmark::State& state) {
    const int level = static_cast<int>(state.range(0));
    const ssiw::PadicContext ctx(3, 8);
    const auto tower = ssiw::TowerRing::build(ssiw::good_frobenius_lift(ctx, 3), level, 6);
    const auto point = tower->division_point(level);
    for (auto _ : state) benchmark::DoNotOptimize(tower->conjugates(point, 0));
}
BENCHMARK(BM_Conjugates)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_FieldTrace(benchmark::State& state) {
    const ssiw::PadicContext ctx(3, 8);
    const auto tower = ssiw::TowerRing::build(ssiw::good_frobenius_lift(ctx, 3), 3, 6);
    const auto x = tower->division_point(3) * tower->division_point(2);
    for (auto _ : state) benchmark::DoNotOptimize(tower->field_trace(x, 3, 0));
}
BENCHMARK(BM_FieldTrace)->Unit(benchmark::kMillisecond);

} // namespace
