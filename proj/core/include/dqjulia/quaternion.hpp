#pragma once

#include <cmath>
#include <initializer_list>
#include <utility>

#include "dqjulia/vec3.hpp"

namespace dqjulia {

// Quaternion stored as (s, x, y, z) with s the scalar part and (x, y, z) the
// vector part. All arithmetic is in double; operations are pure and safe to
// call concurrently.
struct Quaternion {
    double s = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 vec() const { return {x, y, z}; }
};

namespace detail {

// Compensated sum of four products (TwoProd + TwoSum cascade). Keeps every
// product component of the Hamilton product within an ulp of the exact sum,
// which plain left-to-right evaluation does not at |q| ~ 10 scale.
inline double dot4(double a1, double b1, double a2, double b2, double a3, double b3, double a4,
                   double b4) {
    double p = a1 * b1;
    double e = std::fma(a1, b1, -p);
    for (const auto& [a, b] : {std::pair{a2, b2}, std::pair{a3, b3}, std::pair{a4, b4}}) {
        const double q = a * b;
        const double f = std::fma(a, b, -q);
        const double s = p + q;
        const double t = s - p;
        e += f + ((p - (s - t)) + (q - t));
        p = s;
    }
    return p + e;
}

} // namespace detail

constexpr Quaternion quat_add(const Quaternion& a, const Quaternion& b) {
    return {a.s + b.s, a.x + b.x, a.y + b.y, a.z + b.z};
}

constexpr Quaternion quat_scale(double k, const Quaternion& q) {
    return {k * q.s, k * q.x, k * q.y, k * q.z};
}

// Hamilton product: [s1,v1][s2,v2] = [s1 s2 - v1.v2, s1 v2 + s2 v1 + v1 x v2].
inline Quaternion quat_mul(const Quaternion& a, const Quaternion& b) {
    return {
        detail::dot4(a.s, b.s, -a.x, b.x, -a.y, b.y, -a.z, b.z),
        detail::dot4(a.s, b.x, a.x, b.s, a.y, b.z, -a.z, b.y),
        detail::dot4(a.s, b.y, a.y, b.s, a.z, b.x, -a.x, b.z),
        detail::dot4(a.s, b.z, a.z, b.s, a.x, b.y, -a.y, b.x),
    };
}

constexpr Quaternion quat_conjugate(const Quaternion& q) { return {q.s, -q.x, -q.y, -q.z}; }

constexpr double quat_dot(const Quaternion& a, const Quaternion& b) {
    return a.s * b.s + a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double quat_norm(const Quaternion& q) { return std::sqrt(quat_dot(q, q)); }

// Closed-form square (s^2 - |v|^2, 2 s v), equal to quat_mul(q, q): the
// scalar shares quat_mul's compensated cascade and 2 (s v) is the correctly
// rounded double of the one product either way.
inline Quaternion quat_square(const Quaternion& q) {
    return {
        detail::dot4(q.s, q.s, -q.x, q.x, -q.y, q.y, -q.z, q.z),
        2.0 * (q.s * q.x),
        2.0 * (q.s * q.y),
        2.0 * (q.s * q.z),
    };
}

inline Quaternion operator+(const Quaternion& a, const Quaternion& b) { return quat_add(a, b); }
inline Quaternion operator*(double k, const Quaternion& q) { return quat_scale(k, q); }
inline Quaternion operator*(const Quaternion& a, const Quaternion& b) { return quat_mul(a, b); }

} // namespace dqjulia
