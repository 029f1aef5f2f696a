#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dqjulia/dual_quaternion.hpp"
#include "dqjulia_cli/run_config.hpp"

namespace dqjulia::cli {

// splitmix64: state advances by 0x9E3779B97F4A7C15 and the output is the
// mixed state (xor-shift-multiply with 0xBF58476D1CE4E5B9 and
// 0x94D049BB133111EB). Every sweep draw consumes exactly eight outputs,
// each mapped to [-1, 1) via 2 * (x >> 11) * 2^-53 - 1, filling the real
// part's s,x,y,z then the dual part's s,x,y,z.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [-1, 1)
    double signed_unit() { return 2.0 * (static_cast<double>(next() >> 11) * 0x1.0p-53) - 1.0; }
};

DualQuaternion draw_constant(SplitMix64& rng);

// "sweep_NNN_c=(a,b,c,d)(e,f,g,h).ppm" with the components at two decimals.
std::string sweep_filename(int index, const DualQuaternion& c);

// Renders count constants drawn from seed into the output directory
// (created if needed); returns the file names in render order.
std::vector<std::string> run_sweep(const RunConfig& config);

} // namespace dqjulia::cli
