#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "envelope/geometry.hpp"

namespace envelope {

/// Absolute on-curve tolerance for unit-scale families.
inline constexpr double kPointOnCurveTol = 1e-9;

enum class Method { classical, radial, limit, projection };

const char* method_name(Method m);

/// A one-parameter family of implicit plane curves in level-set form
/// f(x, y, alpha) = 0. A point lies on member C_alpha iff
/// |residual(x, y, alpha)| <= kPointOnCurveTol.
///
/// Immutable after construction; the residual must be finite on a bounded
/// query window for every alpha in [alpha_min, alpha_max]. No derivative is
/// carried; callers that need one use central differences.
struct ImplicitFamily {
    std::function<double(double, double, double)> residual_fn;
    double alpha_min = 0.0;
    double alpha_max = 0.0;
    std::string name;
};

/// The family of circles (x-a)^2 + y^2 = 1-a^2, a in [-1, 1]. Member C_a is
/// centered at (a, 0) with radius sqrt(1-a^2); C_{+-1} degenerates to a point.
const ImplicitFamily& circle_family();

/// The family of ellipses 2(x-a)^2 + y^2 = 1-2a^2, a in [-1/sqrt2, 1/sqrt2].
/// Member at a is centered at (a, 0) with x semi-axis sqrt((1-2a^2)/2) and
/// y semi-axis sqrt(1-2a^2).
const ImplicitFamily& ellipse_family();

/// An envelope point together with the member parameter that generated it.
struct BoundaryPoint {
    double x = 0.0;
    double y = 0.0;
    double alpha = 0.0;
    Method method = Method::classical;
};

/// Upper/lower envelope points contributed by one member; equal when the
/// envelope touches the member on the sweep line.
struct BoundaryPair {
    BoundaryPoint upper;
    BoundaryPoint lower;
};

/// Ordered closed polyline of envelope points. Points are strictly ordered by
/// polar angle about the origin; max_abs_residual is measured against the
/// analytic envelope when the family has a known one, NaN otherwise.
struct EnvelopeCurve {
    std::vector<BoundaryPoint> points;
    double max_abs_residual = 0.0;
    Method method = Method::classical;
};

/// Sorts by polar angle, drops duplicate angles, and fills max_abs_residual
/// from `analytic` when provided.
EnvelopeCurve assemble_envelope(std::vector<BoundaryPoint> points, Method method,
                                const std::function<double(double, double)>* analytic = nullptr);

/// sqrt(1 - alpha^2); the radius law of the circle family.
/// Throws std::domain_error when |alpha| > 1.
double radius_of_alpha(double alpha);

/// Signed residual of member C_alpha at (x, y).
/// Throws std::domain_error when alpha is outside the family's domain.
double family_residual(const ImplicitFamily& family, double x, double y, double alpha);

/// The points of member C_alpha where dy/dx = 0, located as the extrema of y
/// on the member (top first, then bottom). Extrema are found by an angle sweep
/// about an interior point with golden-section/parabolic refinement; no
/// derivatives of the residual are required. Degenerate (zero-extent) members
/// yield an empty list.
std::vector<Point2> null_isocline_points(const ImplicitFamily& family, double alpha);

/// (x * factor, y). Throws std::domain_error when factor <= 0.
Point2 stretch_x(Point2 p, double factor);

/// Signed residual x^2/2 + y^2 - 1 of the circle family's elliptical envelope.
double analytic_envelope_residual(double x, double y);

/// Residual form of the known analytic envelope for a family, when there is
/// one (the circle family's ellipse, the ellipse family's unit circle).
std::optional<std::function<double(double, double)>> known_envelope_residual(
    const ImplicitFamily& family);

/// n points of the analytic elliptical envelope, ordered by polar angle.
std::vector<Point2> analytic_envelope_points(int n);

// --- member tracing -------------------------------------------------------
// Members of the supported families are convex ovals; they are traced by ray
// casting from an interior point.

/// A point strictly inside member C_alpha (negative residual), found by a
/// refined grid scan of the query window. Empty when the member has no
/// interior (degenerate or empty member).
std::optional<Point2> member_interior(const ImplicitFamily& family, double alpha);

/// Distance t > 0 along direction theta from `origin` to the member boundary
/// (first sign change of the residual). Empty if no crossing within the query
/// window. `origin` must be interior.
std::optional<double> ray_to_member(const ImplicitFamily& family, double alpha,
                                    Point2 origin, double theta);

/// Closed polyline of member C_alpha, one point per angle of a uniform sweep
/// in [0, 2*pi). Degenerate members yield n copies of the member's point when
/// the residual vanishes somewhere, otherwise an empty list.
std::vector<Point2> trace_member(const ImplicitFamily& family, double alpha, int n);

}  // namespace envelope
