#pragma once

#include <optional>

#include "envelope/family.hpp"

namespace envelope {

/// A ray direction from the origin, stored as an angle so vertical rays are
/// representable; the slope tan(theta) is carried only when cos(theta) is
/// nonzero (within 1e-12).
struct RayDirection {
    double theta = 0.0;  // in [0, 2*pi)
    std::optional<double> slope;

    static RayDirection from_angle(double theta);
    static RayDirection from_slope(double m);
};

/// The two abscissae where the line y = m x meets circle member C_alpha,
/// i.e. the roots of (m^2+1) x^2 - 2 alpha x + (2 alpha^2 - 1) = 0. Roots are
/// present iff the discriminant alpha^2 - (m^2+1)(2 alpha^2 - 1) is
/// nonnegative; the discriminant is always reported.
struct RayCircleIntersection {
    std::optional<double> x_plus;
    std::optional<double> x_minus;
    double alpha = 0.0;
    double discriminant = 0.0;
};

/// Both roots of the ray/circle quadratic for the circle family.
/// Throws std::domain_error when |alpha| > 1 and std::invalid_argument when
/// the ray is vertical (use vertical_ray_intersect).
RayCircleIntersection ray_circle_intersect(double alpha, const RayDirection& ray);

/// Intersection of the upward vertical ray x = 0, y >= 0 with C_alpha:
/// (0, sqrt(1 - 2 alpha^2)) when the circle crosses the y-axis, absent
/// otherwise.
std::optional<Point2> vertical_ray_intersect(double alpha);

/// The member parameter maximizing the outward root along slope m:
/// 1 / (2 sqrt(m^2 + 1/2)), always in (0, sqrt(2)/2].
double alpha_max_for_slope(double m);

/// Envelope abscissa along slope m: 1 / sqrt(m^2 + 1/2); the envelope point
/// is (x_b, m x_b).
double boundary_x_for_slope(double m);

/// Full envelope from the closed forms, swept over theta_grid_n directions in
/// [0, 2*pi). Vertical directions use the vertical closed form; the left
/// half-plane uses the family's x -> -x symmetry. Throws std::invalid_argument
/// when theta_grid_n < 4.
EnvelopeCurve radial_envelope(int theta_grid_n);

/// Derivative-free maximizer of the ray/member intersection distance over an
/// alpha grid with golden-section refinement; the independent check for the
/// closed forms. Throws std::invalid_argument when alpha_grid_n < 100.
BoundaryPoint radial_brute_force(double theta, int alpha_grid_n);

}  // namespace envelope
