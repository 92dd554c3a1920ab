#pragma once

#include <cmath>
#include <cstdint>

namespace xxnet {

/// sin(pi * a / b) for integers a, b (b > 0), with the argument reduced in
/// exact integer arithmetic before the trig call. Keeps lattice symmetries
/// such as sin(pi*m*(N+1-l)/(N+1)) = +-sin(pi*m*l/(N+1)) bit-exact and the
/// absolute error at a few ulp even for large a.
inline double sinpi_ratio(std::int64_t a, std::int64_t b) {
    a %= 2 * b;
    if (a < 0) a += 2 * b;
    double sign = 1.0;
    if (a >= b) {
        a -= b;
        sign = -1.0;
    }
    if (2 * a > b) a = b - a;  // sin(pi x) = sin(pi (1-x))
    return sign * std::sin(M_PI * (static_cast<double>(a) / static_cast<double>(b)));
}

/// cos(pi * a / b), reduced the same way.
inline double cospi_ratio(std::int64_t a, std::int64_t b) {
    return sinpi_ratio(b - 2 * a, 2 * b);  // cos(pi a/b) = sin(pi (b-2a)/(2b))
}

/// Kahan compensated accumulator. Summation order still matters for
/// bit-exact reproducibility; this only shrinks the rounding error.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

}  // namespace xxnet
