#include "envelope/projection.hpp"

#include <cmath>
#include <stdexcept>

#include "envelope/classical.hpp"

namespace envelope {

namespace {
constexpr double kSqrt1_2 = 0.70710678118654752440;
constexpr double kSqrt2 = 1.41421356237309504880;
}  // namespace

Point2 ProjectedEllipse::at(double t) const {
    return {center_x + semi_x * std::cos(t), semi_y * std::sin(t)};
}

ProjectedEllipse project_latitude_circle(double latitude, double tilt) {
    if (std::fabs(latitude) > kPi / 2.0) {
        throw std::domain_error("project_latitude_circle: |latitude| > pi/2");
    }
    if (tilt < 0.0 || tilt > kPi / 2.0) {
        throw std::domain_error("project_latitude_circle: tilt outside [0, pi/2]");
    }
    ProjectedEllipse pe;
    pe.center_x = std::sin(latitude) * std::sin(tilt);
    pe.semi_x = std::cos(latitude) * std::cos(tilt);
    pe.semi_y = std::cos(latitude);
    pe.latitude = latitude;
    return pe;
}

std::vector<ProjectedEllipse> project_family(const TiltedSphereConfig& config) {
    std::vector<ProjectedEllipse> shadows;
    shadows.reserve(config.latitude_grid.size());
    for (double lat : config.latitude_grid) {
        shadows.push_back(project_latitude_circle(lat, config.tilt));
    }
    return shadows;
}

double FeMember::residual(double x, double y) const {
    return 2.0 * (x - alpha) * (x - alpha) + y * y - (1.0 - 2.0 * alpha * alpha);
}

FeMember fe_member_from_latitude(double latitude) {
    return FeMember{std::sin(latitude) * kSqrt1_2};
}

double verify_stretch_congruence(const std::vector<double>& latitude_grid, int sample_n) {
    if (sample_n < 8) {
        throw std::invalid_argument("verify_stretch_congruence: sample_n must be >= 8");
    }
    const auto& fc = circle_family();
    double worst = 0.0;
    for (double lat : latitude_grid) {
        const ProjectedEllipse pe = project_latitude_circle(lat, kPi / 4.0);
        const double alpha_prime = fe_member_from_latitude(lat).alpha * kSqrt2;
        for (int k = 0; k < sample_n; ++k) {
            const double t = kTwoPi * static_cast<double>(k) / sample_n;
            const Point2 image = stretch_x(pe.at(t), kSqrt2);
            worst = std::fmax(worst, std::fabs(fc.residual_fn(image.x, image.y, alpha_prime)));
        }
    }
    return worst;
}

double fe_envelope_is_unit_circle(const std::vector<double>& latitude_grid) {
    if (latitude_grid.empty()) {
        throw std::invalid_argument("fe_envelope_is_unit_circle: empty latitude grid");
    }
    auto unit_circle_residual = [](double x, double y) { return x * x + y * y - 1.0; };
    if (latitude_grid.size() == 1) {
        // one member has no envelope: report how far the member itself sits
        // from the unit circle
        const ProjectedEllipse pe = project_latitude_circle(latitude_grid.front(), kPi / 4.0);
        double worst = 0.0;
        const int n = 1024;
        for (int k = 0; k < n; ++k) {
            const Point2 p = pe.at(kTwoPi * static_cast<double>(k) / n);
            worst = std::fmax(worst, std::fabs(unit_circle_residual(p.x, p.y)));
        }
        return worst;
    }
    const auto& fe = ellipse_family();
    ClassicalSolverConfig cfg;
    double worst = 0.0;
    for (double lat : latitude_grid) {
        const double alpha = fe_member_from_latitude(lat).alpha;
        auto pair = classical_point_for_alpha(fe, alpha, cfg);
        if (!pair) continue;
        worst = std::fmax(worst, std::fabs(unit_circle_residual(pair->upper.x, pair->upper.y)));
        worst = std::fmax(worst, std::fabs(unit_circle_residual(pair->lower.x, pair->lower.y)));
    }
    return worst;
}

}  // namespace envelope
