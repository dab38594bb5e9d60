// Test-only oracles, independent of the library paths they validate.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "envelope/family.hpp"

namespace oracle {

// deterministic uniform draw built on the standardized mt19937 output
inline double uniform(std::mt19937& rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng()) / 4294967296.0);
}

// --- member parameterizations (closed forms, no tracing) -------------------

// circle member of F_C at alpha, parameter t in [0, 2pi)
inline envelope::Point2 circle_point(double alpha, double t) {
    const double r = std::sqrt(1.0 - alpha * alpha);
    return {alpha + r * std::cos(t), r * std::sin(t)};
}

// ellipse member of F_E at alpha
inline envelope::Point2 ellipse_point(double alpha, double t) {
    const double b = std::sqrt(1.0 - 2.0 * alpha * alpha);
    return {alpha + b / std::sqrt(2.0) * std::cos(t), b * std::sin(t)};
}

// y-extrema of a parameterized member found by dense scan + local parabolic
// refinement of the parameter
inline std::array<envelope::Point2, 2> param_extrema(
    const std::function<envelope::Point2(double)>& member) {
    const int n = 40000;
    double best_hi = -1e300, best_lo = 1e300, t_hi = 0.0, t_lo = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = 2.0 * M_PI * i / n;
        const double y = member(t).y;
        if (y > best_hi) { best_hi = y; t_hi = t; }
        if (y < best_lo) { best_lo = y; t_lo = t; }
    }
    auto refine = [&](double t0, double sign) {
        const double h = 2.0 * M_PI / n;
        const double ym = sign * member(t0 - h).y, y0 = sign * member(t0).y,
                     yp = sign * member(t0 + h).y;
        const double denom = yp - 2.0 * y0 + ym;
        if (denom >= 0.0) return t0;
        return t0 - 0.5 * h * (yp - ym) / denom;
    };
    return {member(refine(t_hi, +1.0)), member(refine(t_lo, -1.0))};
}

// --- scan + bisection on raw residuals --------------------------------------

// all roots of f on [lo, hi] found by cell scan + bisection
inline std::vector<double> scan_roots(const std::function<double(double)>& f, double lo,
                                      double hi, int cells = 4000) {
    std::vector<double> roots;
    double px = lo, pf = f(lo);
    for (int i = 1; i <= cells; ++i) {
        const double x = lo + (hi - lo) * i / cells;
        const double fx = f(x);
        if (pf == 0.0) roots.push_back(px);
        if ((pf > 0.0) != (fx > 0.0) && pf != 0.0 && fx != 0.0) {
            double a = px, b = x, fa = pf;
            for (int k = 0; k < 200; ++k) {
                const double m = 0.5 * (a + b), fm = f(m);
                if ((fm > 0.0) == (fa > 0.0)) { a = m; fa = fm; } else { b = m; }
            }
            roots.push_back(0.5 * (a + b));
        }
        px = x;
        pf = fx;
    }
    return roots;
}

// intersection points of circle members C_alpha and C_{alpha+delta} found by
// scanning the parameterization of C_alpha against the other circle's residual
inline std::vector<envelope::Point2> two_circle_intersections(double alpha, double delta) {
    const auto& fc = envelope::circle_family();
    auto g = [&](double t) {
        const auto p = circle_point(alpha, t);
        return fc.residual_fn(p.x, p.y, alpha + delta);
    };
    std::vector<envelope::Point2> out;
    for (double t : scan_roots(g, 0.0, 2.0 * M_PI, 8000)) {
        out.push_back(circle_point(alpha, t));
    }
    return out;
}

// brute maximizer over alpha of the outward ray/member intersection along
// slope m, using only the raw substituted residual (no quadratic formula)
struct SlopeMaximum {
    double alpha = 0.0;
    double x = 0.0;
};

inline SlopeMaximum maximize_outward_root(double m) {
    auto outward_x = [&](double alpha) -> double {
        auto h = [&](double x) {
            return (x - alpha) * (x - alpha) + m * x * m * x - (1.0 - alpha * alpha);
        };
        const auto roots = scan_roots(h, -2.0, 2.0, 2000);
        double best = -1e300;
        for (double r : roots) best = std::fmax(best, r);
        return roots.empty() ? -1e300 : best;
    };
    const int n = 2001;
    double best = -1e300;
    int bi = 0;
    for (int i = 0; i < n; ++i) {
        const double a = -1.0 + 2.0 * i / (n - 1);
        const double v = outward_x(a);
        if (v > best) { best = v; bi = i; }
    }
    double lo = -1.0 + 2.0 * std::max(0, bi - 1) / (n - 1);
    double hi = -1.0 + 2.0 * std::min(n - 1, bi + 1) / (n - 1);
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = hi - inv_phi * (hi - lo), d = lo + inv_phi * (hi - lo);
    double fc_ = outward_x(c), fd = outward_x(d);
    for (int k = 0; k < 60; ++k) {
        if (fc_ > fd) { hi = d; d = c; fd = fc_; c = hi - inv_phi * (hi - lo); fc_ = outward_x(c); }
        else { lo = c; c = d; fc_ = fd; d = lo + inv_phi * (hi - lo); fd = outward_x(d); }
    }
    SlopeMaximum sm;
    sm.alpha = 0.5 * (lo + hi);
    sm.x = outward_x(sm.alpha);
    return sm;
}

// --- 3D shadow construction --------------------------------------------------

struct FittedEllipse {
    double center_x = 0.0;
    double semi_x = 0.0;
    double semi_y = 0.0;
};

// Builds the latitude circle in the sphere frame, tilts the frame about the
// y-axis, drops z, and least-squares fits p x^2 + q y^2 + r x = 1 to the
// shadow points. Independent of the closed-form shadow parameters.
inline FittedEllipse shadow_by_construction(double latitude, double tilt, int samples = 256) {
    const double cl = std::cos(latitude), sl = std::sin(latitude);
    const double ct = std::cos(tilt), st = std::sin(tilt);
    // normal equations for (p, q, r)
    double A[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    double b[3] = {0, 0, 0};
    for (int i = 0; i < samples; ++i) {
        const double t = 2.0 * M_PI * i / samples;
        // sphere frame: (cl cos t, cl sin t, sl); rotate about y by tilt
        const double x = ct * (cl * std::cos(t)) + st * sl;
        const double y = cl * std::sin(t);
        const double row[3] = {x * x, y * y, x};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) A[r][c] += row[r] * row[c];
            b[r] += row[r];
        }
    }
    // gaussian elimination with partial pivoting
    int idx[3] = {0, 1, 2};
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r) {
            if (std::fabs(A[idx[r]][col]) > std::fabs(A[idx[piv]][col])) piv = r;
        }
        std::swap(idx[col], idx[piv]);
        for (int r = col + 1; r < 3; ++r) {
            const double f = A[idx[r]][col] / A[idx[col]][col];
            for (int c = col; c < 3; ++c) A[idx[r]][c] -= f * A[idx[col]][c];
            b[idx[r]] -= f * b[idx[col]];
        }
    }
    double sol[3];
    for (int r = 2; r >= 0; --r) {
        double s = b[idx[r]];
        for (int c = r + 1; c < 3; ++c) s -= A[idx[r]][c] * sol[c];
        sol[r] = s / A[idx[r]][r];
    }
    const double p = sol[0], q = sol[1], rr = sol[2];
    FittedEllipse fit;
    fit.center_x = -rr / (2.0 * p);
    const double S = 1.0 + rr * rr / (4.0 * p);
    fit.semi_x = std::sqrt(S / p);
    fit.semi_y = std::sqrt(S / q);
    return fit;
}

// --- finite-family union boundary --------------------------------------------

// Outer boundary of the union of the finite circle subfamily, sampled by rays
// from the origin: for each direction the farthest intersection over all
// members. Independent of the arc-assembly path.
inline envelope::EnvelopeCurve union_boundary(const std::vector<double>& alphas, int rays) {
    envelope::EnvelopeCurve curve;
    curve.method = envelope::Method::limit;
    for (int i = 0; i < rays; ++i) {
        const double th = 2.0 * M_PI * i / rays;
        const double dx = std::cos(th), dy = std::sin(th);
        double best = -1e300, best_a = 0.0;
        for (double a : alphas) {
            // (t dx - a)^2 + (t dy)^2 = 1 - a^2  =>  t^2 - 2 a dx t + 2a^2 - 1 = 0
            const double disc = a * a * dx * dx - (2.0 * a * a - 1.0);
            if (disc < 0.0) continue;
            const double t = a * dx + std::sqrt(disc);
            if (t > best) { best = t; best_a = a; }
        }
        if (best > -1e300) {
            curve.points.push_back({best * dx, best * dy, best_a, envelope::Method::limit});
        }
    }
    return curve;
}

// total turning angle of a closed polyline (2*pi for a convex loop)
inline double total_turning(const std::vector<envelope::BoundaryPoint>& pts) {
    double sum = 0.0;
    const size_t n = pts.size();
    for (size_t i = 0; i < n; ++i) {
        const auto& a = pts[i];
        const auto& b = pts[(i + 1) % n];
        const auto& c = pts[(i + 2) % n];
        const double ux = b.x - a.x, uy = b.y - a.y;
        const double vx = c.x - b.x, vy = c.y - b.y;
        sum += std::atan2(ux * vy - uy * vx, ux * vx + uy * vy);
    }
    return sum;
}

}  // namespace oracle
