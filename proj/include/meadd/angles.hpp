#pragma once

#include <cmath>
#include <numbers>

namespace meadd {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Reduce to the canonical interval (-pi, pi].
inline double wrap_to_pi(double x) {
    double y = std::remainder(x, two_pi);
    if (y <= -pi) y += two_pi;
    return y;
}

// Reduce to [-pi, pi): the value +pi maps to -pi. Used where a half-angle
// must land in [-pi/2, pi/2), e.g. the even-block prefactor convention.
inline double wrap_to_pi_low(double x) {
    double y = std::remainder(x, two_pi);
    if (y >= pi) y -= two_pi;
    if (y < -pi) y += two_pi;
    return y;
}

// Distance between angles identified mod 2*pi.
inline double angle_dist(double a, double b) {
    return std::abs(wrap_to_pi(a - b));
}

} // namespace meadd
