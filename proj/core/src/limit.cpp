#include "envelope/limit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace envelope {

namespace {

constexpr double kSqrt1_2 = 0.70710678118654752440;

// Value at 0 of the polynomial through (xs, ys), by Neville's scheme.
// correction reports the magnitude of the last tableau update.
double extrapolate_to_zero(const std::vector<double>& xs, const std::vector<double>& ys,
                           double* correction) {
    std::vector<double> p = ys;
    const size_t n = p.size();
    double prev = p[0];
    for (size_t k = 1; k < n; ++k) {
        for (size_t i = 0; i + k < n; ++i) {
            p[i] = (xs[i] * p[i + 1] - xs[i + k] * p[i]) / (xs[i] - xs[i + k]);
        }
        if (k == n - 1 && correction != nullptr) *correction = std::fabs(p[0] - prev);
        prev = p[0];
    }
    if (n == 1 && correction != nullptr) *correction = 0.0;
    return p[0];
}

}  // namespace

std::optional<NeighborIntersection> neighbor_intersection(double alpha, double delta) {
    if (delta == 0.0) {
        throw std::domain_error("neighbor_intersection: delta must be nonzero");
    }
    if (std::fabs(alpha) > 1.0 || std::fabs(alpha + delta) > 1.0) {
        throw std::domain_error("neighbor_intersection: parameters outside [-1, 1]");
    }
    const double x = 2.0 * alpha + delta;
    const double dxc = x - alpha;  // = alpha + delta
    const double y2 = 1.0 - alpha * alpha - dxc * dxc;
    if (y2 < 0.0) return std::nullopt;
    const double y = std::sqrt(y2);
    return NeighborIntersection{alpha, delta, x, y, -y};
}

std::vector<double> default_delta_sequence() {
    std::vector<double> seq;
    seq.reserve(14);
    for (int k = 0; k < 14; ++k) seq.push_back(0.1 / std::pow(2.0, k));
    return seq;
}

std::optional<BoundaryPair> limit_boundary_point(double alpha,
                                                 const std::vector<double>& delta_sequence) {
    if (delta_sequence.empty()) {
        throw std::invalid_argument("limit_boundary_point: empty delta sequence");
    }
    for (size_t i = 0; i < delta_sequence.size(); ++i) {
        if (!(delta_sequence[i] > 0.0)) {
            throw std::invalid_argument("limit_boundary_point: deltas must be positive");
        }
        if (i > 0 && !(delta_sequence[i] < delta_sequence[i - 1])) {
            throw std::invalid_argument("limit_boundary_point: deltas must strictly decrease");
        }
    }
    std::vector<double> deltas;
    for (double d : delta_sequence) {
        if (d >= kDeltaFloor) deltas.push_back(d);
    }
    if (deltas.empty()) {
        throw std::invalid_argument("limit_boundary_point: all deltas below the floor");
    }

    std::vector<double> ds, xs, y2s;
    size_t absent_smallest = 0;  // consecutive absences counted from the smallest delta
    for (size_t i = deltas.size(); i-- > 0;) {
        const double d = deltas[i];
        std::optional<NeighborIntersection> hit;
        if (std::fabs(alpha) <= 1.0 && std::fabs(alpha + d) <= 1.0) {
            hit = neighbor_intersection(alpha, d);
        }
        if (hit) {
            ds.push_back(d);
            xs.push_back(hit->x);
            y2s.push_back(hit->y_plus * hit->y_plus);
        } else if (ds.empty()) {
            ++absent_smallest;
        }
    }
    if (absent_smallest >= std::min<size_t>(3, deltas.size())) {
        return std::nullopt;  // no limit: neighbors never meet near delta -> 0
    }
    if (ds.size() < 4) {
        throw ExtrapolationError(
            "limit_boundary_point: fewer than 4 intersecting deltas to extrapolate", alpha);
    }

    double corr_x = 0.0, corr_y2 = 0.0;
    const double x0 = extrapolate_to_zero(ds, xs, &corr_x);
    const double y20 = extrapolate_to_zero(ds, y2s, &corr_y2);
    if (corr_x > kExtrapolationTol || corr_y2 > kExtrapolationTol) {
        throw ExtrapolationError("limit_boundary_point: extrapolation did not settle", alpha);
    }
    const double y0 = std::sqrt(std::fmax(0.0, y20));
    BoundaryPair pair;
    pair.upper = {x0, y0, alpha, Method::limit};
    pair.lower = {x0, -y0, alpha, Method::limit};
    return pair;
}

PolygonalEnvelope polygonal_envelope(int circle_count) {
    if (circle_count < 3 || circle_count % 2 == 0) {
        throw std::invalid_argument("polygonal_envelope: circle_count must be odd and >= 3");
    }
    const int n = circle_count;
    const double cut = kSqrt1_2;
    std::vector<double> alphas(n), radii(n);
    for (int i = 0; i < n; ++i) {
        alphas[i] = -cut + 2.0 * cut * static_cast<double>(i) / (n - 1);
        radii[i] = std::sqrt(1.0 - alphas[i] * alphas[i]);
    }
    // upper intersection of adjacent members i, i+1 (x = alpha_i + alpha_{i+1})
    std::vector<Point2> upper(n - 1);
    for (int i = 0; i + 1 < n; ++i) {
        const double x = alphas[i] + alphas[i + 1];
        const double y2 = 1.0 - alphas[i] * alphas[i] - alphas[i + 1] * alphas[i + 1];
        upper[i] = {x, std::sqrt(y2)};
    }
    auto angle_about = [&](int i, Point2 p) {
        return std::atan2(p.y - 0.0, p.x - alphas[i]);
    };

    PolygonalEnvelope poly;
    poly.circle_count = n;
    // counterclockwise from (sqrt(2), 0): upper arcs right-to-left
    poly.arcs.push_back({{alphas[n - 1], 0.0}, radii[n - 1], 0.0, angle_about(n - 1, upper[n - 2])});
    poly.joints.push_back(upper[n - 2]);
    for (int i = n - 2; i >= 1; --i) {
        poly.arcs.push_back(
            {{alphas[i], 0.0}, radii[i], angle_about(i, upper[i]), angle_about(i, upper[i - 1])});
        poly.joints.push_back(upper[i - 1]);
    }
    poly.arcs.push_back({{alphas[0], 0.0}, radii[0], angle_about(0, upper[0]), kPi});
    // lower half, mirrored, continuing counterclockwise through (-sqrt(2), 0)
    auto mirror = [](Point2 p) { return Point2{p.x, -p.y}; };
    poly.arcs.push_back(
        {{alphas[0], 0.0}, radii[0], kPi, kTwoPi - angle_about(0, upper[0])});
    poly.joints.push_back(mirror(upper[0]));
    for (int i = 1; i <= n - 2; ++i) {
        poly.arcs.push_back({{alphas[i], 0.0},
                             radii[i],
                             kTwoPi - angle_about(i, upper[i - 1]),
                             kTwoPi - angle_about(i, upper[i])});
        poly.joints.push_back(mirror(upper[i]));
    }
    poly.arcs.push_back(
        {{alphas[n - 1], 0.0}, radii[n - 1], kTwoPi - angle_about(n - 1, upper[n - 2]), kTwoPi});
    return poly;
}

EnvelopeCurve sample_polygonal(const PolygonalEnvelope& poly, int points_per_arc) {
    if (points_per_arc < 1) {
        throw std::invalid_argument("sample_polygonal: points_per_arc must be >= 1");
    }
    std::vector<BoundaryPoint> points;
    points.reserve(poly.arcs.size() * static_cast<size_t>(points_per_arc));
    for (const auto& arc : poly.arcs) {
        for (int k = 0; k < points_per_arc; ++k) {
            // half-open sampling so adjacent arcs tile without duplicate joints
            const double t =
                arc.theta_start + (arc.theta_end - arc.theta_start) * k / points_per_arc;
            points.push_back({arc.center.x + arc.radius * std::cos(t),
                              arc.center.y + arc.radius * std::sin(t), arc.center.x,
                              Method::limit});
        }
    }
    static const std::function<double(double, double)> analytic = [](double x, double y) {
        return analytic_envelope_residual(x, y);
    };
    return assemble_envelope(std::move(points), Method::limit, &analytic);
}

namespace {

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
    const double vx = b.x - a.x, vy = b.y - a.y;
    const double len2 = vx * vx + vy * vy;
    double t = 0.0;
    if (len2 > 0.0) {
        t = ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2;
        t = std::clamp(t, 0.0, 1.0);
    }
    return std::hypot(p.x - (a.x + t * vx), p.y - (a.y + t * vy));
}

double directed_hausdorff_points(const std::vector<BoundaryPoint>& a,
                                 const std::vector<BoundaryPoint>& b) {
    double worst = 0.0;
    for (const auto& p : a) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& q : b) {
            nearest = std::fmin(nearest, distance({p.x, p.y}, {q.x, q.y}));
        }
        worst = std::fmax(worst, nearest);
    }
    return worst;
}

double directed_hausdorff_polyline(const std::vector<BoundaryPoint>& a,
                                   const std::vector<BoundaryPoint>& b) {
    double worst = 0.0;
    for (const auto& p : a) {
        double nearest = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < b.size(); ++j) {
            const auto& s = b[j];
            const auto& e = b[(j + 1) % b.size()];
            nearest = std::fmin(nearest,
                                point_segment_distance({p.x, p.y}, {s.x, s.y}, {e.x, e.y}));
        }
        worst = std::fmax(worst, nearest);
    }
    return worst;
}

}  // namespace

double hausdorff_distance(const EnvelopeCurve& a, const EnvelopeCurve& b) {
    if (a.points.empty() || b.points.empty()) {
        throw std::invalid_argument("hausdorff_distance: empty curve");
    }
    return std::fmax(directed_hausdorff_points(a.points, b.points),
                     directed_hausdorff_points(b.points, a.points));
}

double hausdorff_distance_polyline(const EnvelopeCurve& a, const EnvelopeCurve& b) {
    if (a.points.empty() || b.points.empty()) {
        throw std::invalid_argument("hausdorff_distance_polyline: empty curve");
    }
    return std::fmax(directed_hausdorff_polyline(a.points, b.points),
                     directed_hausdorff_polyline(b.points, a.points));
}

}  // namespace envelope
