#pragma once

#include <cmath>

#include "dqjulia/quaternion.hpp"

namespace dqjulia {

// Dual quaternion q_r + q_d * eps with eps^2 = 0. The dual unit is implicit
// in the pair structure and never stored.
struct DualQuaternion {
    Quaternion real;
    Quaternion dual;
};

// How the forward-iteration square is evaluated. Componentwise squares each
// quaternion part independently; CliffordExact is the full dual-number
// product with the eps^2 term dropped. The two agree on the real part but
// differ on the dual part.
enum class SquaringMode {
    PaperComponentwise,
    CliffordExact,
};

constexpr DualQuaternion dq_add(const DualQuaternion& a, const DualQuaternion& b) {
    return {quat_add(a.real, b.real), quat_add(a.dual, b.dual)};
}

constexpr DualQuaternion dq_scale(double k, const DualQuaternion& a) {
    return {quat_scale(k, a.real), quat_scale(k, a.dual)};
}

// Clifford product: real = r1 r2, dual = r1 d2 + d1 r2 (eps^2 terms vanish).
inline DualQuaternion dq_mul(const DualQuaternion& a, const DualQuaternion& b) {
    return {
        quat_mul(a.real, b.real),
        quat_add(quat_mul(a.real, b.dual), quat_mul(a.dual, b.real)),
    };
}

constexpr DualQuaternion dq_conjugate(const DualQuaternion& a) {
    return {quat_conjugate(a.real), quat_conjugate(a.dual)};
}

// Squared 8-component Euclidean norm; single-real escape tests compare this
// against radius^2 to avoid the sqrt in the hot loop.
constexpr double dq_norm_squared(const DualQuaternion& a) {
    return quat_dot(a.real, a.real) + quat_dot(a.dual, a.dual);
}

// Scalar magnitude used by the escape test and the distance estimators:
// sqrt(|q_r|^2 + |q_d|^2). Dominates the quaternion norm of either part.
inline double dq_magnitude(const DualQuaternion& a) { return std::sqrt(dq_norm_squared(a)); }

inline DualQuaternion dq_square(const DualQuaternion& a, SquaringMode mode) {
    if (mode == SquaringMode::PaperComponentwise) {
        return {quat_square(a.real), quat_square(a.dual)};
    }
    return dq_mul(a, a);
}

constexpr DualQuaternion operator+(const DualQuaternion& a, const DualQuaternion& b) { return dq_add(a, b); }
constexpr DualQuaternion operator*(double k, const DualQuaternion& a) { return dq_scale(k, a); }
inline DualQuaternion operator*(const DualQuaternion& a, const DualQuaternion& b) { return dq_mul(a, b); }

} // namespace dqjulia
