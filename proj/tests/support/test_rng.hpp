#pragma once

#include <cstdint>

#include "dqjulia/dual_quaternion.hpp"
#include "dqjulia/quaternion.hpp"

// Small deterministic generator for property tests (splitmix64 core).
// Seeded per test case so failures reproduce exactly.
struct TestRng {
    std::uint64_t state;

    explicit TestRng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    dqjulia::Quaternion quat(double lo, double hi) {
        return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
    }

    dqjulia::DualQuaternion dual_quat(double lo, double hi) {
        return {quat(lo, hi), quat(lo, hi)};
    }
};
