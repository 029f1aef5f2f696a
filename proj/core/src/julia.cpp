#include "dqjulia/julia.hpp"

#include <cmath>

namespace dqjulia {

namespace {

constexpr double component(const DualQuaternion& q, int slot) {
    switch (slot) {
    case 0: return q.real.s;
    case 1: return q.real.x;
    case 2: return q.real.y;
    case 3: return q.real.z;
    case 4: return q.dual.s;
    case 5: return q.dual.x;
    case 6: return q.dual.y;
    default: return q.dual.z;
    }
}

constexpr void set_component(DualQuaternion& q, int slot, double v) {
    switch (slot) {
    case 0: q.real.s = v; break;
    case 1: q.real.x = v; break;
    case 2: q.real.y = v; break;
    case 3: q.real.z = v; break;
    case 4: q.dual.s = v; break;
    case 5: q.dual.x = v; break;
    case 6: q.dual.y = v; break;
    default: q.dual.z = v; break;
    }
}

} // namespace

DualQuaternion embed_point(const Vec3& p, const SliceConfig& slice) {
    DualQuaternion z;
    for (int slot = 0; slot < kDualQuaternionComponents; ++slot) {
        set_component(z, slot, slice.constants[static_cast<size_t>(slot)]);
    }
    set_component(z, slice.point_slots[0], p.x);
    set_component(z, slice.point_slots[1], p.y);
    set_component(z, slice.point_slots[2], p.z);
    return z;
}

OrbitResult iterate_orbit(const DualQuaternion& z0, const SceneParams& scene) {
    const double escape_sq = scene.iter.escape_radius * scene.iter.escape_radius;

    DualQuaternion z = z0;
    double mag_sq = dq_norm_squared(z);
    double deriv_sq = 1.0;  // |zeta'|^2, seed |zeta'_0| = 1

    for (int n = 0; n < scene.iter.max_iterations; ++n) {
        if (mag_sq > escape_sq) {
            return {true, n, std::sqrt(mag_sq), std::sqrt(deriv_sq)};
        }
        deriv_sq *= 4.0 * mag_sq;  // |zeta'_{n+1}| = 2 |zeta_n| |zeta'_n|
        z = dq_add(dq_square(z, scene.iter.squaring_mode), scene.c);
        mag_sq = dq_norm_squared(z);
    }
    return {mag_sq > escape_sq, scene.iter.max_iterations, std::sqrt(mag_sq), std::sqrt(deriv_sq)};
}

bool membership(const Vec3& p, const SceneParams& scene) {
    return !iterate_orbit(embed_point(p, scene.slice), scene).escaped;
}

double distance_estimate(const Vec3& p, const SceneParams& scene) {
    const OrbitResult orbit = iterate_orbit(embed_point(p, scene.slice), scene);
    if (!orbit.escaped || orbit.derivative_magnitude == 0.0) {
        return 0.0;
    }
    const double ratio = orbit.final_magnitude / orbit.derivative_magnitude;
    double d = 0.0;
    switch (scene.de_variant) {
    case DeVariant::HartLog:
        d = 0.5 * ratio * std::log(orbit.final_magnitude);
        break;
    case DeVariant::RatioAlpha:
        d = scene.alpha * ratio;
        break;
    }
    return d > 0.0 ? d : 0.0;
}

} // namespace dqjulia
