#include "zpd/constructions.hpp"
#include "zpd/functions.hpp"
#include "zpd/orbits.hpp"
#include "zpd/spectrum.hpp"
#include "zpd/weak_tiling.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace zpd;

namespace {

RayFn random_ray(const GeometryPtr &geo, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    RayFn f(geo);
    f.at_zero() = 1;
    for (std::uint32_t l = 0; l < geo->line_count(); ++l) f.on_line(l) = make_rational(static_cast<long>(rng() % 7), 3);
    return f;
}

void BM_FtRay(benchmark::State &state) {
    const auto geo = Geometry::of(GroupParams(static_cast<std::uint32_t>(state.range(0)), 3));
    const auto f = random_ray(geo, 1);
    for (auto _ : state) benchmark::DoNotOptimize(ft_ray(f));
}
BENCHMARK(BM_FtRay)->Arg(3)->Arg(5)->Arg(7)->Arg(11);

void BM_ConvolveRay(benchmark::State &state) {
    const auto geo = Geometry::of(GroupParams(static_cast<std::uint32_t>(state.range(0)), 3));
    const auto a = random_ray(geo, 2), b = random_ray(geo, 3);
    for (auto _ : state) benchmark::DoNotOptimize(convolve(a, b));
}
BENCHMARK(BM_ConvolveRay)->Arg(3)->Arg(5)->Arg(7);

void BM_WeakPdLp(benchmark::State &state) {
    const auto geo = Geometry::of(GroupParams(static_cast<std::uint32_t>(state.range(0)), 3));
    std::vector<std::uint32_t> plane;
    for (std::uint32_t x = 0; x < geo->order(); ++x) {
        if (geo->point(x)[0] == 0) plane.push_back(x);
    }
    const PointSet a(geo, plane);
    for (auto _ : state) benchmark::DoNotOptimize(pd_tiling_feasible(a));
}
BENCHMARK(BM_WeakPdLp)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SpectrumSearch(benchmark::State &state) {
    const auto geo = Geometry::of(GroupParams(3, 3));
    std::vector<std::uint32_t> plane;
    for (std::uint32_t x = 0; x < geo->order(); ++x) {
        if (geo->point(x)[0] == 0) plane.push_back(x);
    }
    // Fresh PointSet each time so the cached zero-set is recomputed.
    for (auto _ : state) benchmark::DoNotOptimize(find_spectrum(PointSet(geo, plane)));
}
BENCHMARK(BM_SpectrumSearch)->Unit(benchmark::kMillisecond);

void BM_OrbitReps(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(orbit_reps(GroupParams(3, 3), static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_OrbitReps)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_NearPencil(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(near_pencil_tuple(7, static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_NearPencil)->Arg(3)->Arg(8)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
