#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "envelope/classical.hpp"
#include "envelope/limit.hpp"
#include "oracles.hpp"

using namespace envelope;

namespace {
const double kCut = std::sqrt(0.5);

EnvelopeCurve analytic_curve(int n) {
    EnvelopeCurve c;
    for (const auto& p : analytic_envelope_points(n)) {
        c.points.push_back({p.x, p.y, 0.0, Method::classical});
    }
    return c;
}

EnvelopeCurve circle_curve(double cx, double cy, double r, int n) {
    EnvelopeCurve c;
    for (int i = 0; i < n; ++i) {
        const double t = kTwoPi * i / n;
        c.points.push_back({cx + r * std::cos(t), cy + r * std::sin(t), 0.0, Method::classical});
    }
    return c;
}
}  // namespace

TEST_CASE("neighbor intersection matches the two-circle scan") {
    auto hit = neighbor_intersection(0.3, 0.1);
    REQUIRE(hit.has_value());
    CHECK(hit->x == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(hit->y_plus == doctest::Approx(std::sqrt(0.75)).epsilon(1e-12));
    CHECK(hit->y_minus == doctest::Approx(-std::sqrt(0.75)).epsilon(1e-12));
    auto pts = oracle::two_circle_intersections(0.3, 0.1);
    REQUIRE(pts.size() == 2);
    for (const auto& p : pts) {
        CHECK(p.x == doctest::Approx(hit->x).epsilon(1e-8));
        CHECK(std::fabs(p.y) == doctest::Approx(hit->y_plus).epsilon(1e-8));
    }

    auto wide = neighbor_intersection(0.0, 0.5);
    REQUIRE(wide.has_value());
    CHECK(wide->x == doctest::Approx(0.5).epsilon(1e-12));
    const auto& fc = circle_family();
    CHECK(std::fabs(fc.residual_fn(wide->x, wide->y_plus, 0.0)) <= 1e-9);
    CHECK(std::fabs(fc.residual_fn(wide->x, wide->y_plus, 0.5)) <= 1e-9);

    CHECK_FALSE(neighbor_intersection(0.75, 0.1).has_value());
}

TEST_CASE("neighbor intersection argument errors") {
    CHECK_THROWS_AS(neighbor_intersection(0.3, 0.0), std::domain_error);
    CHECK_THROWS_AS(neighbor_intersection(0.98, 0.1), std::domain_error);
    CHECK_THROWS_AS(neighbor_intersection(1.2, 0.1), std::domain_error);
}

TEST_CASE("the elimination is exactly linear in delta") {
    std::mt19937 rng(61);
    int checked = 0;
    while (checked < 1000) {
        const double alpha = oracle::uniform(rng, -0.9, 0.9);
        const double delta = oracle::uniform(rng, 1e-5, 0.09);
        if (std::fabs(alpha + delta) > 1.0) continue;
        auto hit = neighbor_intersection(alpha, delta);
        if (!hit) continue;
        CHECK(std::fabs(hit->x - (2.0 * alpha + delta)) <= 1e-12);
        // on both circles
        const auto& fc = circle_family();
        CHECK(std::fabs(fc.residual_fn(hit->x, hit->y_plus, alpha)) <= 1e-9);
        CHECK(std::fabs(fc.residual_fn(hit->x, hit->y_minus, alpha + delta)) <= 1e-9);
        ++checked;
    }
}

TEST_CASE("limit of neighboring intersections") {
    std::vector<double> seq;
    for (int k = 0; k <= 6; ++k) seq.push_back(0.1 / std::pow(2.0, k));

    auto lp = limit_boundary_point(0.5, seq);
    REQUIRE(lp.has_value());
    // agrees with the tangency solve
    auto cp = classical_point_for_alpha(circle_family(), 0.5);
    REQUIRE(cp.has_value());
    CHECK(lp->upper.x == doctest::Approx(cp->upper.x).epsilon(1e-6));
    CHECK(lp->upper.y == doctest::Approx(cp->upper.y).epsilon(1e-6));
    CHECK(lp->upper.x == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(lp->upper.y == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
    CHECK(lp->lower.y == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-9));

    auto poles = limit_boundary_point(0.0, default_delta_sequence());
    REQUIRE(poles.has_value());
    CHECK(poles->upper.x == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(poles->upper.y == doctest::Approx(1.0).epsilon(1e-9));

    CHECK_FALSE(limit_boundary_point(0.8, default_delta_sequence()).has_value());
}

TEST_CASE("limit sequence validation") {
    CHECK_THROWS_AS(limit_boundary_point(0.3, {}), std::invalid_argument);
    CHECK_THROWS_AS(limit_boundary_point(0.3, {0.1, 0.2}), std::invalid_argument);
    CHECK_THROWS_AS(limit_boundary_point(0.3, {0.1, -0.05}), std::invalid_argument);
    CHECK_THROWS_AS(limit_boundary_point(0.3, {1e-7, 1e-8}), std::invalid_argument);
    // intersections exist but too few deltas to fit
    CHECK_THROWS_AS(limit_boundary_point(0.3, {0.1, 0.05, 0.025}), ExtrapolationError);
}

TEST_CASE("limit agrees with the classical solve across the contributing range") {
    const auto deltas = default_delta_sequence();
    double worst = 0.0;
    for (int i = 0; i < 101; ++i) {
        const double a = -kCut + 2.0 * kCut * (i + 0.5) / 101.0;
        auto lp = limit_boundary_point(a, deltas);
        auto cp = classical_point_for_alpha(circle_family(), a);
        REQUIRE(lp.has_value());
        REQUIRE(cp.has_value());
        worst = std::fmax(worst, std::hypot(lp->upper.x - cp->upper.x, lp->upper.y - cp->upper.y));
        // extrapolated points land on the analytic envelope
        CHECK(std::fabs(analytic_envelope_residual(lp->upper.x, lp->upper.y)) <= 1e-6);
        CHECK(std::fabs(analytic_envelope_residual(lp->lower.x, lp->lower.y)) <= 1e-6);
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("polygonal envelope structure") {
    auto poly = polygonal_envelope(31);
    CHECK(poly.circle_count == 31);
    CHECK(poly.arcs.size() == 62);
    CHECK(poly.joints.size() == 60);

    SUBCASE("adjacent arcs share their joints") {
        for (size_t i = 0; i < poly.arcs.size(); ++i) {
            const auto& a = poly.arcs[i];
            const auto& b = poly.arcs[(i + 1) % poly.arcs.size()];
            const Point2 a_end{a.center.x + a.radius * std::cos(a.theta_end),
                               a.center.y + a.radius * std::sin(a.theta_end)};
            const Point2 b_start{b.center.x + b.radius * std::cos(b.theta_start),
                                 b.center.y + b.radius * std::sin(b.theta_start)};
            CHECK(distance(a_end, b_start) <= 1e-9);
        }
    }
    SUBCASE("joints lie outside or on every member") {
        const auto& fc = circle_family();
        for (int i = 0; i < poly.circle_count; ++i) {
            const double a = -kCut + 2.0 * kCut * i / (poly.circle_count - 1);
            for (const auto& j : poly.joints) {
                CHECK(fc.residual_fn(j.x, j.y, a) >= -1e-9);
            }
        }
    }
    SUBCASE("the assembled boundary turns through one full revolution") {
        auto curve = sample_polygonal(poly, 16);
        CHECK(oracle::total_turning(curve.points) == doctest::Approx(kTwoPi).epsilon(1e-6));
    }
    SUBCASE("counts are validated") {
        CHECK_THROWS_AS(polygonal_envelope(2), std::invalid_argument);
        CHECK_THROWS_AS(polygonal_envelope(30), std::invalid_argument);
        CHECK_THROWS_AS(polygonal_envelope(-5), std::invalid_argument);
    }
}

TEST_CASE("minimal three-member outline is a valid closed curve") {
    auto poly = polygonal_envelope(3);
    auto curve = sample_polygonal(poly, 32);
    CHECK(curve.points.size() >= 6 * 31);
    CHECK(oracle::total_turning(curve.points) == doctest::Approx(kTwoPi).epsilon(1e-6));
}

TEST_CASE("31 members approximate the envelope to the measured bound") {
    auto curve = sample_polygonal(polygonal_envelope(31), 64);
    const auto ellipse = analytic_curve(4096);
    const double h_points = hausdorff_distance(curve, ellipse);
    const double h_segments = hausdorff_distance_polyline(curve, ellipse);
    // measured on this implementation: segment metric 7.61e-4; the point
    // metric adds sampling slack
    CHECK(h_segments <= 8.0e-4);
    CHECK(h_points <= 0.01);
}

TEST_CASE("refinement is monotone with second-order contact") {
    const auto ellipse = analytic_curve(4096);
    double prev = 1e300, h31 = 0.0;
    double fitted_c = 0.0;
    for (int n : {7, 15, 31, 63, 127}) {
        auto curve = sample_polygonal(polygonal_envelope(n), 64);
        const double h = hausdorff_distance_polyline(curve, ellipse);
        CHECK(h <= prev);
        prev = h;
        if (n == 31) h31 = h;
        fitted_c = std::fmax(fitted_c, h * n * n);
    }
    // reported, not asserted: contact looks second order when h*n^2 is flat
    MESSAGE("fitted C in h <= C/n^2: ", fitted_c);
    auto fine = sample_polygonal(polygonal_envelope(501), 8);
    CHECK(hausdorff_distance_polyline(fine, ellipse) <= h31);
}

TEST_CASE("hausdorff distance") {
    auto a = circle_curve(0.0, 0.0, 1.0, 2048);
    CHECK(hausdorff_distance(a, a) == 0.0);
    auto b = circle_curve(0.0, 0.0, 1.1, 2048);
    CHECK(hausdorff_distance(a, b) == doctest::Approx(0.1).epsilon(1e-3));

    EnvelopeCurve p, q;
    p.points.push_back({0.0, 0.0, 0.0, Method::classical});
    q.points.push_back({3.0, 4.0, 0.0, Method::classical});
    CHECK(hausdorff_distance(p, q) == doctest::Approx(5.0).epsilon(1e-15));

    EnvelopeCurve empty;
    CHECK_THROWS_AS(hausdorff_distance(empty, a), std::invalid_argument);
    CHECK_THROWS_AS(hausdorff_distance(a, empty), std::invalid_argument);
}
