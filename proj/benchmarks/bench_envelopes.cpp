#include <benchmark/benchmark.h>

#include "envelope/classical.hpp"
#include "envelope/family.hpp"
#include "envelope/limit.hpp"
#include "envelope/radial.hpp"

using namespace envelope;

static void BM_ClassicalEnvelope(benchmark::State& state) {
    ClassicalSolverConfig cfg;
    cfg.alpha_grid_n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(classical_envelope(circle_family(), cfg));
    }
}
BENCHMARK(BM_ClassicalEnvelope)->Arg(51)->Arg(201);

static void BM_RadialEnvelope(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(radial_envelope(static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_RadialEnvelope)->Arg(360)->Arg(3600);

static void BM_RadialBruteForce(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(radial_brute_force(0.37, 1000));
    }
}
BENCHMARK(BM_RadialBruteForce);

static void BM_LimitExtrapolation(benchmark::State& state) {
    const auto deltas = default_delta_sequence();
    for (auto _ : state) {
        benchmark::DoNotOptimize(limit_boundary_point(0.5, deltas));
    }
}
BENCHMARK(BM_LimitExtrapolation);

static void BM_PolygonalEnvelope(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(polygonal_envelope(static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_PolygonalEnvelope)->Arg(31)->Arg(127);

static void BM_Hausdorff(benchmark::State& state) {
    auto a = sample_polygonal(polygonal_envelope(31), 16);
    EnvelopeCurve b;
    for (const auto& p : analytic_envelope_points(512)) {
        b.points.push_back({p.x, p.y, 0.0, Method::classical});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(hausdorff_distance(a, b));
    }
}
BENCHMARK(BM_Hausdorff);

static void BM_NullIsocline(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(null_isocline_points(circle_family(), 0.6));
    }
}
BENCHMARK(BM_NullIsocline);

BENCHMARK_MAIN();
