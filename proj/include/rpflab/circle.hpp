// Circle geometry helpers. The circle is R/Z parametrized by [0,1).
#pragma once

#include <cmath>

namespace rpflab {

// Wraps a real number into [0,1).
inline double wrap(double x) {
    double w = x - std::floor(x);
    if (w >= 1.0) w -= 1.0;  // guards against floor rounding at negative epsilons
    return w;
}

// Signed representative of y-x in (-1/2, 1/2].
inline double signed_diff(double x, double y) {
    double d = wrap(y) - wrap(x);
    if (d > 0.5) d -= 1.0;
    if (d <= -0.5) d += 1.0;
    return d;
}

// Circle distance, in [0, 1/2].
inline double circle_dist(double x, double y) {
    return std::fabs(signed_diff(x, y));
}

inline constexpr double kCircleDiameter = 0.5;

}  // namespace rpflab
