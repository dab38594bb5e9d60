#include "envelope/family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "envelope/rootfind.hpp"

namespace envelope {

namespace {

// Bounded query window all supported families live in.
constexpr double kWindow = 2.0;
constexpr double kSqrt1_2 = 0.70710678118654752440;

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::classical: return "classical";
        case Method::radial: return "radial";
        case Method::limit: return "limit";
        case Method::projection: return "projection";
    }
    return "unknown";
}

const ImplicitFamily& circle_family() {
    static const ImplicitFamily fc{
        [](double x, double y, double alpha) {
            return (x - alpha) * (x - alpha) + y * y - (1.0 - alpha * alpha);
        },
        -1.0, 1.0, "fc"};
    return fc;
}

const ImplicitFamily& ellipse_family() {
    static const ImplicitFamily fe{
        [](double x, double y, double alpha) {
            return 2.0 * (x - alpha) * (x - alpha) + y * y - (1.0 - 2.0 * alpha * alpha);
        },
        -kSqrt1_2, kSqrt1_2, "fe"};
    return fe;
}

double radius_of_alpha(double alpha) {
    if (std::fabs(alpha) > 1.0) {
        throw std::domain_error("radius_of_alpha: |alpha| > 1");
    }
    return std::sqrt(std::fmax(0.0, 1.0 - alpha * alpha));
}

double family_residual(const ImplicitFamily& family, double x, double y, double alpha) {
    if (alpha < family.alpha_min || alpha > family.alpha_max) {
        throw std::domain_error("family_residual: alpha outside [" +
                                std::to_string(family.alpha_min) + ", " +
                                std::to_string(family.alpha_max) + "]");
    }
    return family.residual_fn(x, y, alpha);
}

Point2 stretch_x(Point2 p, double factor) {
    if (!(factor > 0.0)) {
        throw std::domain_error("stretch_x: factor must be > 0");
    }
    return {p.x * factor, p.y};
}

double analytic_envelope_residual(double x, double y) {
    return 0.5 * x * x + y * y - 1.0;
}

std::optional<std::function<double(double, double)>> known_envelope_residual(
    const ImplicitFamily& family) {
    if (family.name == "fc") {
        return std::function<double(double, double)>(
            [](double x, double y) { return analytic_envelope_residual(x, y); });
    }
    if (family.name == "fe") {
        return std::function<double(double, double)>(
            [](double x, double y) { return x * x + y * y - 1.0; });
    }
    return std::nullopt;
}

std::vector<Point2> analytic_envelope_points(int n) {
    if (n < 1) throw std::invalid_argument("analytic_envelope_points: n must be >= 1");
    std::vector<Point2> pts;
    pts.reserve(static_cast<size_t>(n));
    const double sqrt2 = std::sqrt(2.0);
    for (int i = 0; i < n; ++i) {
        double t = kTwoPi * static_cast<double>(i) / n;
        pts.push_back({sqrt2 * std::cos(t), std::sin(t)});
    }
    return pts;
}

EnvelopeCurve assemble_envelope(std::vector<BoundaryPoint> points, Method method,
                                const std::function<double(double, double)>* analytic) {
    std::stable_sort(points.begin(), points.end(), [](const BoundaryPoint& a, const BoundaryPoint& b) {
        return polar_angle({a.x, a.y}) < polar_angle({b.x, b.y});
    });
    // keep strict angle ordering: drop later points with (near-)equal angle
    std::vector<BoundaryPoint> kept;
    kept.reserve(points.size());
    for (const auto& p : points) {
        if (!kept.empty()) {
            double da = polar_angle({p.x, p.y}) - polar_angle({kept.back().x, kept.back().y});
            if (da <= 1e-12) continue;
        }
        kept.push_back(p);
    }
    EnvelopeCurve curve;
    curve.points = std::move(kept);
    curve.method = method;
    if (analytic != nullptr) {
        double worst = 0.0;
        for (const auto& p : curve.points) {
            worst = std::fmax(worst, std::fabs((*analytic)(p.x, p.y)));
        }
        curve.max_abs_residual = worst;
    } else {
        curve.max_abs_residual = std::numeric_limits<double>::quiet_NaN();
    }
    return curve;
}

std::optional<Point2> member_interior(const ImplicitFamily& family, double alpha) {
    double cx = 0.0, cy = 0.0, half = kWindow;
    double best = std::numeric_limits<double>::infinity();
    Point2 best_p{0.0, 0.0};
    // refined grid scan: each pass re-grids around the current minimum
    for (int pass = 0; pass < 4; ++pass) {
        const int n = (pass == 0) ? 61 : 21;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                double x = cx - half + 2.0 * half * i / (n - 1);
                double y = cy - half + 2.0 * half * j / (n - 1);
                double r = family.residual_fn(x, y, alpha);
                if (r < best) {
                    best = r;
                    best_p = {x, y};
                }
            }
        }
        cx = best_p.x;
        cy = best_p.y;
        half *= 0.1;
    }
    if (best >= -1e-12) return std::nullopt;
    return best_p;
}

std::optional<double> ray_to_member(const ImplicitFamily& family, double alpha,
                                    Point2 origin, double theta) {
    const double dx = std::cos(theta), dy = std::sin(theta);
    auto g = [&](double t) {
        return family.residual_fn(origin.x + t * dx, origin.y + t * dy, alpha);
    };
    if (g(0.0) >= 0.0) return std::nullopt;
    double t_hi = 1e-3;
    while (g(t_hi) < 0.0) {
        t_hi *= 2.0;
        if (t_hi > 4.0 * kWindow) return std::nullopt;
    }
    RootResult r = find_root(g, 0.0, t_hi, 1e-15, 100);
    if (!r.converged) return std::nullopt;
    return r.x;
}

std::vector<Point2> trace_member(const ImplicitFamily& family, double alpha, int n) {
    if (n < 1) throw std::invalid_argument("trace_member: n must be >= 1");
    std::vector<Point2> pts;
    auto interior = member_interior(family, alpha);
    if (!interior) {
        // degenerate member: locate the single point where the residual attains
        // (near) zero, if it does
        double best = std::numeric_limits<double>::infinity();
        Point2 best_p{0.0, 0.0};
        double cx = 0.0, cy = 0.0, half = kWindow;
        for (int pass = 0; pass < 5; ++pass) {
            const int m = (pass == 0) ? 121 : 21;
            for (int i = 0; i < m; ++i) {
                for (int j = 0; j < m; ++j) {
                    double x = cx - half + 2.0 * half * i / (m - 1);
                    double y = cy - half + 2.0 * half * j / (m - 1);
                    double r = std::fabs(family.residual_fn(x, y, alpha));
                    if (r < best) {
                        best = r;
                        best_p = {x, y};
                    }
                }
            }
            cx = best_p.x;
            cy = best_p.y;
            half *= 0.1;
        }
        if (best <= kPointOnCurveTol) {
            pts.assign(static_cast<size_t>(n), best_p);
        }
        return pts;
    }
    pts.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double theta = kTwoPi * static_cast<double>(i) / n;
        auto t = ray_to_member(family, alpha, *interior, theta);
        if (!t) continue;
        pts.push_back({interior->x + *t * std::cos(theta), interior->y + *t * std::sin(theta)});
    }
    return pts;
}

std::vector<Point2> null_isocline_points(const ImplicitFamily& family, double alpha) {
    auto interior = member_interior(family, alpha);
    if (!interior) return {};

    auto y_of = [&](double theta) -> double {
        auto t = ray_to_member(family, alpha, *interior, theta);
        if (!t) return -std::numeric_limits<double>::infinity();
        return interior->y + *t * std::sin(theta);
    };
    auto point_at = [&](double theta) -> Point2 {
        auto t = ray_to_member(family, alpha, *interior, theta);
        double tt = t.value_or(0.0);
        return {interior->x + tt * std::cos(theta), interior->y + tt * std::sin(theta)};
    };

    // coarse sweep locates the cells containing the y extrema
    const int sweep_n = 256;
    double best_max = -std::numeric_limits<double>::infinity();
    double best_min = std::numeric_limits<double>::infinity();
    int i_max = 0, i_min = 0;
    for (int i = 0; i < sweep_n; ++i) {
        double theta = kTwoPi * static_cast<double>(i) / sweep_n;
        double y = y_of(theta);
        if (y > best_max) {
            best_max = y;
            i_max = i;
        }
        if (y < best_min) {
            best_min = y;
            i_min = i;
        }
    }
    const double cell = kTwoPi / sweep_n;
    double th_top = maximize_unimodal(y_of, (i_max - 1) * cell, (i_max + 1) * cell);
    auto neg_y = [&](double th) { return -y_of(th); };
    double th_bot = maximize_unimodal(neg_y, (i_min - 1) * cell, (i_min + 1) * cell);
    return {point_at(th_top), point_at(th_bot)};
}

}  // namespace envelope
