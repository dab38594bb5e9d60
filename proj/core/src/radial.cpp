#include "envelope/radial.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "envelope/rootfind.hpp"

namespace envelope {

namespace {
constexpr double kVerticalCosTol = 1e-12;
}

RayDirection RayDirection::from_angle(double theta) {
    theta = std::fmod(theta, kTwoPi);
    if (theta < 0.0) theta += kTwoPi;
    RayDirection ray;
    ray.theta = theta;
    if (std::fabs(std::cos(theta)) > kVerticalCosTol) {
        ray.slope = std::tan(theta);
    }
    return ray;
}

RayDirection RayDirection::from_slope(double m) {
    RayDirection ray = from_angle(std::atan(m));
    ray.slope = m;
    return ray;
}

RayCircleIntersection ray_circle_intersect(double alpha, const RayDirection& ray) {
    if (std::fabs(alpha) > 1.0) {
        throw std::domain_error("ray_circle_intersect: |alpha| > 1");
    }
    if (!ray.slope) {
        throw std::invalid_argument(
            "ray_circle_intersect: vertical ray, use vertical_ray_intersect");
    }
    const double m = *ray.slope;
    const double a = m * m + 1.0;
    RayCircleIntersection out;
    out.alpha = alpha;
    out.discriminant = alpha * alpha - a * (2.0 * alpha * alpha - 1.0);
    if (out.discriminant >= 0.0) {
        const double s = std::sqrt(out.discriminant);
        out.x_plus = (alpha + s) / a;
        out.x_minus = (alpha - s) / a;
    }
    return out;
}

std::optional<Point2> vertical_ray_intersect(double alpha) {
    const double y2 = 1.0 - 2.0 * alpha * alpha;
    if (y2 < 0.0) return std::nullopt;
    return Point2{0.0, std::sqrt(y2)};
}

double alpha_max_for_slope(double m) {
    return 1.0 / (2.0 * std::sqrt(m * m + 0.5));
}

double boundary_x_for_slope(double m) {
    return 1.0 / std::sqrt(m * m + 0.5);
}

EnvelopeCurve radial_envelope(int theta_grid_n) {
    if (theta_grid_n < 4) {
        throw std::invalid_argument("radial_envelope: theta_grid_n must be >= 4");
    }
    std::vector<BoundaryPoint> points;
    points.reserve(static_cast<size_t>(theta_grid_n));
    for (int i = 0; i < theta_grid_n; ++i) {
        const double theta = kTwoPi * static_cast<double>(i) / theta_grid_n;
        const double c = std::cos(theta);
        if (std::fabs(c) <= kVerticalCosTol) {
            // vertical limit: the widest circle crossing the y-axis is alpha = 0
            points.push_back({0.0, std::sin(theta) > 0.0 ? 1.0 : -1.0, 0.0, Method::radial});
        } else if (c > 0.0) {
            const double m = std::tan(theta);
            const double xb = boundary_x_for_slope(m);
            points.push_back({xb, m * xb, alpha_max_for_slope(m), Method::radial});
        } else {
            // mirror of the right half-plane: x -> -x, alpha -> -alpha
            const double m = std::tan(kPi - theta);
            const double xb = boundary_x_for_slope(m);
            points.push_back({-xb, m * xb, -alpha_max_for_slope(m), Method::radial});
        }
    }
    static const std::function<double(double, double)> analytic = [](double x, double y) {
        return analytic_envelope_residual(x, y);
    };
    return assemble_envelope(std::move(points), Method::radial, &analytic);
}

BoundaryPoint radial_brute_force(double theta, int alpha_grid_n) {
    if (alpha_grid_n < 100) {
        throw std::invalid_argument("radial_brute_force: alpha_grid_n must be >= 100");
    }
    const double dx = std::cos(theta), dy = std::sin(theta);
    // farthest ray parameter t with (t dx - alpha)^2 + (t dy)^2 = 1 - alpha^2
    auto farthest_t = [&](double alpha) -> double {
        const double disc = alpha * alpha * dx * dx - 2.0 * alpha * alpha + 1.0;
        if (disc < 0.0) return -std::numeric_limits<double>::infinity();
        const double t = alpha * dx + std::sqrt(disc);
        if (t < 0.0) return -std::numeric_limits<double>::infinity();
        return t;
    };
    double best = -std::numeric_limits<double>::infinity();
    int best_i = 0;
    for (int i = 0; i < alpha_grid_n; ++i) {
        const double alpha = -1.0 + 2.0 * static_cast<double>(i) / (alpha_grid_n - 1);
        const double t = farthest_t(alpha);
        if (t > best) {
            best = t;
            best_i = i;
        }
    }
    const double cell = 2.0 / (alpha_grid_n - 1);
    const double lo = std::fmax(-1.0, -1.0 + cell * (best_i - 1));
    const double hi = std::fmin(1.0, -1.0 + cell * (best_i + 1));
    const double alpha_star = maximize_unimodal(farthest_t, lo, hi, 1e-10, 1e-7);
    const double t_star = farthest_t(alpha_star);
    return {t_star * dx, t_star * dy, alpha_star, Method::radial};
}

}  // namespace envelope
