#include <benchmark/benchmark.h>

#include "dqjulia/render.hpp"
#include "dqjulia/voxel.hpp"

using namespace dqjulia;

namespace {

SceneParams detail_scene(int iterations = 15) {
    SceneParams scene;
    scene.c = {{-0.04, 0.95, 0.4, -0.43}, {0.09, -0.35, -0.27, -0.31}};
    scene.iter.max_iterations = iterations;
    return scene;
}

} // namespace

static void BM_RayMarch_Hit(benchmark::State& state) {
    const SceneParams scene = detail_scene();
    const Ray ray{{0, 0, -3.4}, {0, 0, 1}};
    for (auto _ : state) {
        Hit hit = ray_march(ray, scene, MarchParams{});
        benchmark::DoNotOptimize(hit);
    }
}
BENCHMARK(BM_RayMarch_Hit);

static void BM_RayMarch_CulledMiss(benchmark::State& state) {
    const SceneParams scene = detail_scene();
    const Ray ray{{5, 5, -3.4}, {0, 0, 1}};
    for (auto _ : state) {
        Hit hit = ray_march(ray, scene, MarchParams{});
        benchmark::DoNotOptimize(hit);
    }
}
BENCHMARK(BM_RayMarch_CulledMiss);

static void BM_Render64(benchmark::State& state) {
    const SceneParams scene = detail_scene();
    Camera camera;
    camera.width = 64;
    camera.height = 64;
    RenderOptions options;
    options.workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        ImageBuffer img = render(scene, camera, MarchParams{}, Material{}, Light{}, options);
        benchmark::DoNotOptimize(img);
    }
}
BENCHMARK(BM_Render64)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_Voxelize32(benchmark::State& state) {
    const SceneParams scene = detail_scene(12);
    VoxelGridConfig config;
    config.resolution = 32;
    config.workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        VoxelGrid grid = voxelize(scene, config);
        benchmark::DoNotOptimize(grid);
    }
}
BENCHMARK(BM_Voxelize32)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
