#pragma once

#include <cmath>

// Independent 2D escape-time oracle: z <- z^2 + c over plain doubles, with
// the magnitude test before each squaring and once after the loop. The real
// part of z^2 is the compensated difference of squares (TwoProd + TwoSum),
// i.e. the correctly rounded a^2 - b^2, matching the library's squaring
// precision on the degenerate slice; the imaginary part 2ab needs no
// compensation since doubling is exact.
namespace oracle {

inline double diff_of_squares(double a, double b) {
    double p = a * a;
    double e = std::fma(a, a, -p);
    const double q = (-b) * b;
    const double f = std::fma(-b, b, -q);
    const double s = p + q;
    const double t = s - p;
    e += f + ((p - (s - t)) + (q - t));
    p = s;
    return p + e;
}

struct ComplexOrbit {
    bool escaped = false;
    int steps = 0;
};

inline ComplexOrbit complex_escape(double a0, double b0, double cr, double ci, int max_iterations,
                                   double radius) {
    const double r2 = radius * radius;
    double a = a0;
    double b = b0;
    double m2 = a * a + b * b;
    for (int n = 0; n < max_iterations; ++n) {
        if (m2 > r2) {
            return {true, n};
        }
        const double next_a = diff_of_squares(a, b) + cr;
        const double next_b = 2.0 * (a * b) + ci;
        a = next_a;
        b = next_b;
        m2 = a * a + b * b;
    }
    return {m2 > r2, max_iterations};
}

} // namespace oracle
