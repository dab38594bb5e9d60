#pragma once

#include <cmath>

namespace envelope {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline double distance(Point2 a, Point2 b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// Angle of (x, y) about the origin, normalized to [0, 2*pi).
inline double polar_angle(Point2 p) {
    double a = std::atan2(p.y, p.x);
    if (a < 0.0) a += 2.0 * M_PI;
    return a;
}

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

}  // namespace envelope
