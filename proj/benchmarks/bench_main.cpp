#include <benchmark/benchmark.h>

#include <cfreach/chen_fliess.hpp>
#include <cfreach/grid.hpp>
#include <cfreach/interval.hpp>
#include <cfreach/lie_series.hpp>
#include <cfreach/mixed_monotone.hpp>
#include <cfreach/monte_carlo.hpp>
#include <cfreach/reach_envelope.hpp>
#include <cfreach/system_spec.hpp>

#include <vector>

using namespace cfreach;

namespace {

SampledInput constant_input(int m, double value, double t_final, int steps) {
    SampledInput u;
    u.m = m;
    u.t_final = t_final;
    u.grid_steps = steps;
    u.values.assign(static_cast<std::size_t>(m),
                    std::vector<double>(static_cast<std::size_t>(steps) + 1, value));
    return u;
}

std::vector<double> reporting_grid(double t_final, int points) {
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int p = 0; p < points; ++p)
        grid[static_cast<std::size_t>(p)] = grid_point(t_final, points, p);
    return grid;
}

void BM_GenerateCoefficients(benchmark::State& state) {
    const auto desc = fixture("lotka-volterra");
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(generate_coefficients(desc.system, 0, order));
}
BENCHMARK(BM_GenerateCoefficients)->DenseRange(3, 6);

void BM_Envelope(benchmark::State& state) {
    const auto desc = fixture("ferfera");
    const auto series = generate_coefficients(desc.system, 0, 40);
    const std::vector<FormalPowerSeries> all = {series};
    const InputBox box{1, desc.input_box};
    const auto grid = reporting_grid(1.0, 101);
    for (auto _ : state)
        benchmark::DoNotOptimize(reach_envelope(all, box, grid));
}
BENCHMARK(BM_Envelope);

void BM_IteratedIntegral(benchmark::State& state) {
    const Word w({1, 0, 1});
    const auto u = constant_input(1, 1.3, 1.0, 1000);
    for (auto _ : state) benchmark::DoNotOptimize(iterated_integral(w, u));
}
BENCHMARK(BM_IteratedIntegral);

void BM_Decomposition(benchmark::State& state) {
    const auto desc = fixture("lotka-volterra");
    const std::vector<double> x = {0.1, 0.2};
    const std::vector<double> xh = {0.4, 0.5};
    const std::vector<double> u = {-1.0, -1.0};
    const std::vector<double> uh = {1.0, 1.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(decomposition(desc.system, 0, x, u, xh, uh, 33));
}
BENCHMARK(BM_Decomposition);

void BM_EmbeddingIntegration(benchmark::State& state) {
    const auto desc = fixture("lotka-volterra");
    const auto& sys = desc.system;
    const auto grid = reporting_grid(1.0, 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate_embedding(sys, sys.z0, sys.z0, {-1.0, -1.0},
                                                     {1.0, 1.0}, grid, 33, 10));
}
BENCHMARK(BM_EmbeddingIntegration);

void BM_SimulateRK4(benchmark::State& state) {
    const auto desc = fixture("lotka-volterra");
    const auto u = constant_input(2, 0.5, 1.0, 1000);
    for (auto _ : state) benchmark::DoNotOptimize(simulate(desc.system, u));
}
BENCHMARK(BM_SimulateRK4);

void BM_IntervalPow(benchmark::State& state) {
    const Interval iv(-2.0, 1.5);
    for (auto _ : state) benchmark::DoNotOptimize(pow(iv, 6));
}
BENCHMARK(BM_IntervalPow);

}  // namespace

BENCHMARK_MAIN();
