// Microbenchmarks for the hot paths: spiral coordinates, profile evaluation,
// the inclusion oracle, the dilatation survey, and the conformal map.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include <spirallike/charac.hpp>
#include <spirallike/conformal.hpp>
#include <spirallike/domain.hpp>
#include <spirallike/reflection.hpp>
#include <spirallike/spiral.hpp>

using namespace spirallike;

namespace {

constexpr double two_pi = 6.283185307179586;

const SpiralParams params(0.3, 0.7);

RadiusFunction sampled_profile() {
    std::vector<double> values(720);
    for (std::size_t j = 0; j < values.size(); ++j) {
        values[j] = 0.2 * std::sin(two_pi * static_cast<double>(j) / 720.0);
    }
    return RadiusFunction::sampled(std::move(values));
}

void bm_spiral_point(benchmark::State& state) {
    const LambdaAngle lam(0.3);
    double theta = 0.0;
    for (auto _ : state) {
        theta += 1e-3;
        benchmark::DoNotOptimize(spiral_point(lam, {1.5, theta}));
    }
}
BENCHMARK(bm_spiral_point);

void bm_lambda_arg(benchmark::State& state) {
    const LambdaAngle lam(0.3);
    const Complex w(1.2, -0.7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lambda_arg(lam, w));
    }
}
BENCHMARK(bm_lambda_arg);

void bm_sampled_log_radius(benchmark::State& state) {
    const RadiusFunction r = sampled_profile();
    double theta = 0.0;
    for (auto _ : state) {
        theta += 1e-3;
        benchmark::DoNotOptimize(r.log_radius(theta));
    }
}
BENCHMARK(bm_sampled_log_radius);

void bm_inclusion_oracle(benchmark::State& state) {
    const RadiusFunction r = RadiusFunction::standard_u(params);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_inclusion_boundary(r, params, 720));
    }
}
BENCHMARK(bm_inclusion_oracle)->Unit(benchmark::kMillisecond);

void bm_dilatation_sup(benchmark::State& state) {
    const RadiusFunction r = RadiusFunction::standard_u(params);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dilatation_sup(r, params, 256));
    }
}
BENCHMARK(bm_dilatation_sup)->Unit(benchmark::kMicrosecond);

void bm_map_g(benchmark::State& state) {
    const ConformalMap map(params);
    std::mt19937_64 rng(7u);
    std::uniform_real_distribution<double> mod(0.0, 0.95);
    std::uniform_real_distribution<double> arg(0.0, two_pi);
    for (auto _ : state) {
        const Complex z = std::polar(mod(rng), arg(rng));
        benchmark::DoNotOptimize(map.g(z));
    }
}
BENCHMARK(bm_map_g)->Unit(benchmark::kMicrosecond);

void bm_integral_identity(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(integral_identity(0.7, 0.4));
    }
}
BENCHMARK(bm_integral_identity)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
