#include <benchmark/benchmark.h>

#include "dqjulia/julia.hpp"

using namespace dqjulia;

namespace {

SceneParams detail_scene(int iterations) {
    SceneParams scene;
    scene.c = {{-0.04, 0.95, 0.4, -0.43}, {0.09, -0.35, -0.27, -0.31}};
    scene.iter.max_iterations = iterations;
    return scene;
}

} // namespace

static void BM_IterateOrbit_Inside(benchmark::State& state) {
    const SceneParams scene = detail_scene(static_cast<int>(state.range(0)));
    const DualQuaternion z0 = embed_point({0.05, 0.02, -0.01}, scene.slice);
    for (auto _ : state) {
        OrbitResult orbit = iterate_orbit(z0, scene);
        benchmark::DoNotOptimize(orbit);
    }
}
BENCHMARK(BM_IterateOrbit_Inside)->Arg(10)->Arg(15);

static void BM_IterateOrbit_Escaping(benchmark::State& state) {
    const SceneParams scene = detail_scene(static_cast<int>(state.range(0)));
    const DualQuaternion z0 = embed_point({1.3, 0.4, -0.2}, scene.slice);
    for (auto _ : state) {
        OrbitResult orbit = iterate_orbit(z0, scene);
        benchmark::DoNotOptimize(orbit);
    }
}
BENCHMARK(BM_IterateOrbit_Escaping)->Arg(10)->Arg(15);

static void BM_DistanceEstimate(benchmark::State& state) {
    const SceneParams scene = detail_scene(15);
    for (auto _ : state) {
        double estimate = distance_estimate({1.25, 0.3, 0.2}, scene);
        benchmark::DoNotOptimize(estimate);
    }
}
BENCHMARK(BM_DistanceEstimate);

static void BM_Membership64Row(benchmark::State& state) {
    const SceneParams scene = detail_scene(12);
    for (auto _ : state) {
        int members = 0;
        for (int i = 0; i < 64; ++i) {
            members += membership({-1.5 + (i + 0.5) * 3.0 / 64.0, 0.1, 0.05}, scene);
        }
        benchmark::DoNotOptimize(members);
    }
}
BENCHMARK(BM_Membership64Row);
