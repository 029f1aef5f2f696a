#include <benchmark/benchmark.h>

#include "dqjulia/dual_quaternion.hpp"

using namespace dqjulia;

static void BM_QuatMul(benchmark::State& state) {
    Quaternion a{0.3, -1.2, 0.7, 2.1};
    const Quaternion b{-0.5, 0.9, -1.4, 0.2};
    for (auto _ : state) {
        a = quat_mul(a, b);
        benchmark::DoNotOptimize(a);
        a = quat_scale(1.0 / quat_norm(a), a);  // keep magnitudes tame
    }
}
BENCHMARK(BM_QuatMul);

static void BM_QuatSquare(benchmark::State& state) {
    Quaternion q{0.3, -1.2, 0.7, 0.4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(q);
        Quaternion sq = quat_square(q);
        benchmark::DoNotOptimize(sq);
    }
}
BENCHMARK(BM_QuatSquare);

static void BM_DqSquare_Componentwise(benchmark::State& state) {
    DualQuaternion z{{0.3, -0.6, 0.2, 0.1}, {0.4, -0.2, 0.5, -0.3}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(z);
        DualQuaternion sq = dq_square(z, SquaringMode::PaperComponentwise);
        benchmark::DoNotOptimize(sq);
    }
}
BENCHMARK(BM_DqSquare_Componentwise);

static void BM_DqSquare_Clifford(benchmark::State& state) {
    DualQuaternion z{{0.3, -0.6, 0.2, 0.1}, {0.4, -0.2, 0.5, -0.3}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(z);
        DualQuaternion sq = dq_square(z, SquaringMode::CliffordExact);
        benchmark::DoNotOptimize(sq);
    }
}
BENCHMARK(BM_DqSquare_Clifford);
