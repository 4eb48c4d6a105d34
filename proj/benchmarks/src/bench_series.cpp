#include <random>

#include <benchmark/benchmark.h>

#include "ssiwasawa/lubin_tate.hpp"
#include "ssiwasawa/series.hpp"

namespace {

ssiw::IwasawaSeries random_series(const ssiw::PadicContext& ctx, int degree, std::uint64_t seed, bool unit_linear) {
    std::mt19937_64 rng(seed);
    std::vector<long> c{0, unit_linear ? 1 : static_cast<long>(rng() % 7) - 3};
    for (int i = 2; i <= degree; ++i) c.push_back(static_cast<long>(rng() % 201) - 100);
    return ssiw::IwasawaSeries::from_integers(ctx, degree, c);
}

void BM_Compose(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    const ssiw::PadicContext ctx(3, 20);
    const auto outer = random_series(ctx, degree, 1, true);
    const auto inner = random_series(ctx, degree, 2, true);
    for (auto _ : state) benchmark::DoNotOptimize(ssiw::compose(outer, inner));
}
BENCHMARK(BM_Compose)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Reversion(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    const ssiw::PadicContext ctx(3, 20);
    const auto s = random_series(ctx, degree, 3, true);
    for (auto _ : state) benchmark::DoNotOptimize(ssiw::reversion(s));
}
BENCHMARK(BM_Reversion)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_LubinTateLaw(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    const ssiw::PadicContext ctx(3, 8);
    const auto f = ssiw::good_frobenius_lift(ctx, 3);
    for (auto _ : state) benchmark::DoNotOptimize(ssiw::lubin_tate_law(f, degree));
}
BENCHMARK(BM_LubinTateLaw)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

} // namespace
