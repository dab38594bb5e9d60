#pragma once

#include <vector>

#include "envelope/family.hpp"

namespace envelope {

/// Unit sphere above the plane, N-S axis tilted in the x-z plane by `tilt`
/// radians from the vertical; the 0/180-degree-longitude diameter stays
/// parallel to the plane's y-axis. Shadows are cast by light along -z.
struct TiltedSphereConfig {
    double tilt = kPi / 4.0;
    std::vector<double> latitude_grid;
};

/// Orthographic shadow of one latitudinal circle: an axis-aligned ellipse
/// centered on the x-axis with
///   center_x = sin(latitude) * sin(tilt)
///   semi_x   = cos(latitude) * cos(tilt)   (the shortened direction)
///   semi_y   = cos(latitude)               (the circle's own radius)
struct ProjectedEllipse {
    double center_x = 0.0;
    double semi_x = 0.0;
    double semi_y = 0.0;
    double latitude = 0.0;

    Point2 at(double t) const;  // boundary point at parameter t
};

/// Shadow of the latitude circle; poles degenerate to zero-semi-axis
/// ellipses at (+-sin(tilt), 0). Throws std::domain_error when |latitude| >
/// pi/2 or tilt is outside [0, pi/2].
ProjectedEllipse project_latitude_circle(double latitude, double tilt);

/// Shadows of every latitude circle in the configuration, in grid order.
std::vector<ProjectedEllipse> project_family(const TiltedSphereConfig& config);

/// One member of the ellipse family, tied back to the latitude circle whose
/// shadow it is (tilt fixed at pi/4): alpha = sin(latitude)/sqrt(2).
struct FeMember {
    double alpha = 0.0;
    double residual(double x, double y) const;
};

FeMember fe_member_from_latitude(double latitude);

/// Samples each latitude's shadow, applies the sqrt(2) stretch
/// (x' = x sqrt2, alpha' = alpha sqrt2) and evaluates the circle-family
/// residual at the image; returns the worst |residual|. The stretch maps the
/// ellipse family onto the circle family exactly, so anything above roundoff
/// signals a defect. sample_n must be >= 8.
double verify_stretch_congruence(const std::vector<double>& latitude_grid, int sample_n);

/// Envelope of the ellipse family over the members named by the latitude
/// grid, measured against the unit circle: returns max |x^2 + y^2 - 1| over
/// the envelope points. A single-member grid has no envelope; the member
/// itself is measured instead (and is far from the unit circle).
double fe_envelope_is_unit_circle(const std::vector<double>& latitude_grid);

}  // namespace envelope
