#pragma once

#include <array>

#include "dqjulia/dual_quaternion.hpp"
#include "dqjulia/vec3.hpp"

namespace dqjulia {

// The eight dual-quaternion components are indexed 0..7 in the order
// real.s, real.x, real.y, real.z, dual.s, dual.x, dual.y, dual.z.
inline constexpr int kDualQuaternionComponents = 8;

// A 3D slice of the 8D dual-quaternion space: three slots are driven by the
// sample point, the other five hold fixed constants. Default map sends
// (p.x, p.y, p.z) to the real part's (s, x, y) with all constants zero.
struct SliceConfig {
    std::array<int, 3> point_slots{0, 1, 2};
    std::array<double, 8> constants{};
};

struct IterationParams {
    int max_iterations = 10;        // typical range 6..15
    double escape_radius = 4.0;     // must be > 1
    SquaringMode squaring_mode = SquaringMode::PaperComponentwise;
};

enum class DeVariant {
    HartLog,     // 0.5 * (mu / mu') * ln(mu)
    RatioAlpha,  // alpha * (mu / mu')
};

// Everything that determines the fractal and how distances to it are
// estimated. Immutable during a render; shared freely across threads.
struct SceneParams {
    DualQuaternion c;
    SliceConfig slice;
    IterationParams iter;
    DeVariant de_variant = DeVariant::HartLog;
    double alpha = 0.05;  // only used by RatioAlpha, in (0, 0.1]
};

// Outcome of one escape-time orbit. steps is the iteration index at which
// the magnitude first exceeded the escape radius, or max_iterations if it
// never did. derivative_magnitude is the running scalar |zeta'|, seeded at 1
// and updated as |zeta'| <- 2 |zeta| |zeta'| once per squaring.
struct OrbitResult {
    bool escaped = false;
    int steps = 0;
    double final_magnitude = 0.0;
    double derivative_magnitude = 1.0;
};

DualQuaternion embed_point(const Vec3& p, const SliceConfig& slice);

OrbitResult iterate_orbit(const DualQuaternion& z0, const SceneParams& scene);

// True iff the orbit of the embedded point stays bounded.
bool membership(const Vec3& p, const SceneParams& scene);

// Lower-bound estimate of the distance from p to the set. Returns 0 for
// points whose orbit does not escape (inside or undecided), and clamps the
// estimate to >= 0.
double distance_estimate(const Vec3& p, const SceneParams& scene);

} // namespace dqjulia
