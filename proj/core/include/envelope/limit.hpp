#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "envelope/family.hpp"

namespace envelope {

/// Deltas below this are dropped from extrapolation sequences: the two-circle
/// y computation loses its remaining accuracy to subtractive cancellation.
inline constexpr double kDeltaFloor = 1e-6;

/// Fit-residual (extrapolation convergence) tolerance.
inline constexpr double kExtrapolationTol = 1e-8;

/// Thrown when an extrapolation's convergence estimate exceeds
/// kExtrapolationTol even though intersections exist.
struct ExtrapolationError : std::runtime_error {
    ExtrapolationError(const std::string& msg, double alpha_)
        : std::runtime_error(msg), alpha(alpha_) {}
    double alpha;
};

/// Intersection of circle members C_alpha and C_{alpha+delta}. The
/// elimination is exact: x = 2 alpha + delta, and both (x, y_plus) and
/// (x, y_minus) lie on both circles.
struct NeighborIntersection {
    double alpha = 0.0;
    double delta = 0.0;
    double x = 0.0;
    double y_plus = 0.0;
    double y_minus = 0.0;
};

/// The intersection points of C_alpha and C_{alpha+delta}, absent when the
/// circles do not meet. Throws std::domain_error when delta = 0 (the
/// elimination divides by 2 delta) or when either parameter leaves [-1, 1].
std::optional<NeighborIntersection> neighbor_intersection(double alpha, double delta);

/// The delta -> 0 limit of the neighboring-circle intersections at alpha.
/// Intersections are collected over the (strictly decreasing, positive)
/// delta_sequence; x and y^2 are extrapolated to delta = 0 through the
/// sampled values (x is exactly linear and y^2 exactly quadratic in delta for
/// circle members, so polynomial extrapolation is unbiased). Absent when the
/// intersections vanish for the smallest deltas; throws ExtrapolationError
/// when the extrapolation fails to settle within kExtrapolationTol.
std::optional<BoundaryPair> limit_boundary_point(double alpha,
                                                 const std::vector<double>& delta_sequence);

/// 0.1 / 2^k for k = 0..13; the smallest entry stays above kDeltaFloor.
std::vector<double> default_delta_sequence();

/// Counterclockwise circular arc: points are center + radius * (cos t, sin t)
/// for t in [theta_start, theta_end].
struct ArcSegment {
    Point2 center;
    double radius = 0.0;
    double theta_start = 0.0;
    double theta_end = 0.0;
};

/// Closed outline assembled from the exterior arcs of a finite subfamily,
/// joined at adjacent-pair intersection points. Arcs and joints are stored in
/// counterclockwise traversal order starting from (sqrt(2), 0).
struct PolygonalEnvelope {
    int circle_count = 0;
    std::vector<ArcSegment> arcs;
    std::vector<Point2> joints;
};

/// Finite-family approximation of the envelope: circle_count members placed
/// uniformly over the contributing range [-sqrt(2)/2, sqrt(2)/2], exterior
/// arcs between adjacent-pair intersections, closed at (+-sqrt(2), 0) where
/// the extreme members reach the envelope's x extremes. circle_count must be
/// odd and >= 3 (throws std::invalid_argument otherwise).
PolygonalEnvelope polygonal_envelope(int circle_count);

/// Polyline sampling of the outline, points_per_arc samples on each arc.
EnvelopeCurve sample_polygonal(const PolygonalEnvelope& poly, int points_per_arc);

/// Symmetric discrete Hausdorff distance over the two curves' sampled points.
/// Throws std::invalid_argument on an empty curve.
double hausdorff_distance(const EnvelopeCurve& a, const EnvelopeCurve& b);

/// Symmetric Hausdorff distance treating each curve as a closed polyline
/// (point-to-segment distances); converges quadratically in sample spacing
/// where the point form converges linearly.
double hausdorff_distance_polyline(const EnvelopeCurve& a, const EnvelopeCurve& b);

}  // namespace envelope
