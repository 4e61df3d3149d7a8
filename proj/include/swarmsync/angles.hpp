#pragma once

#include <cmath>
#include <numbers>

namespace swarmsync {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Maps an angle onto (-pi, pi].
inline double wrap_pi(double angle)
{
    double r = std::fmod(angle + kPi, kTwoPi);
    if (r <= 0.0) r += kTwoPi;
    return r - kPi;
}

/// Maps an angle onto [0, 2*pi).
inline double wrap_two_pi(double angle)
{
    double r = std::fmod(angle, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r -= kTwoPi;
    return r;
}

/// Smallest signed difference a - b, in (-pi, pi].
inline double angle_diff(double a, double b) { return wrap_pi(a - b); }

}  // namespace swarmsync
