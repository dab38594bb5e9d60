#include "envelope/compare.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "envelope/classical.hpp"
#include "envelope/csv.hpp"
#include "envelope/family.hpp"
#include "envelope/limit.hpp"
#include "envelope/radial.hpp"

namespace envelope {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kTightTol = 1e-9;
constexpr double kLimitTol = 1e-6;

double method_tol(const std::string& m) { return m == "limit" ? kLimitTol : kTightTol; }

struct MethodRun {
    std::vector<std::optional<Point2>> matched;  // upper point per matched alpha
    double residual = std::numeric_limits<double>::quiet_NaN();
    std::string error;
};

}  // namespace

CompareReport compare_methods(int theta_grid_n, int alpha_grid_n,
                              std::optional<double> tol_override) {
    if (theta_grid_n < 16 || alpha_grid_n < 16) {
        throw std::invalid_argument("compare_methods: grids must be >= 16");
    }
    const auto& fc = circle_family();
    const auto& fe = ellipse_family();
    ClassicalSolverConfig cfg;
    cfg.alpha_grid_n = alpha_grid_n;
    const auto deltas = default_delta_sequence();

    // matched member parameters, upper branch, spanning the contributing range
    std::vector<double> matched_alphas;
    const int match_n = std::min(alpha_grid_n, 33);
    for (int i = 0; i < match_n; ++i) {
        matched_alphas.push_back(0.7 * static_cast<double>(i) / (match_n - 1));
    }

    const std::function<double(double, double)> eq2 = [](double x, double y) {
        return analytic_envelope_residual(x, y);
    };

    std::vector<std::string> names = {"classical", "radial", "limit", "projection"};
    std::vector<MethodRun> runs(4);

    // classical
    try {
        runs[0].residual = classical_envelope(fc, cfg).max_abs_residual;
        for (double a : matched_alphas) {
            auto p = classical_point_for_alpha(fc, a, cfg);
            runs[0].matched.push_back(p ? std::optional<Point2>({p->upper.x, p->upper.y})
                                        : std::nullopt);
        }
    } catch (const std::exception& e) {
        runs[0].error = e.what();
    }

    // radial
    try {
        runs[1].residual = radial_envelope(theta_grid_n).max_abs_residual;
        for (double a : matched_alphas) {
            if (a == 0.0) {
                runs[1].matched.push_back(Point2{0.0, 1.0});
            } else {
                const double m = std::sqrt(1.0 / (4.0 * a * a) - 0.5);
                const double xb = boundary_x_for_slope(m);
                runs[1].matched.push_back(Point2{xb, m * xb});
            }
        }
    } catch (const std::exception& e) {
        runs[1].error = e.what();
    }

    // limit
    try {
        std::vector<BoundaryPoint> pts;
        const double cut = kSqrt2 / 2.0;
        for (int j = 0; j < alpha_grid_n; ++j) {
            const double a = -cut + 2.0 * cut * (j + 0.5) / alpha_grid_n;
            auto p = limit_boundary_point(a, deltas);
            if (!p) continue;
            pts.push_back(p->upper);
            pts.push_back(p->lower);
        }
        runs[2].residual = assemble_envelope(std::move(pts), Method::limit, &eq2).max_abs_residual;
        for (double a : matched_alphas) {
            auto p = limit_boundary_point(a, deltas);
            runs[2].matched.push_back(p ? std::optional<Point2>({p->upper.x, p->upper.y})
                                        : std::nullopt);
        }
    } catch (const std::exception& e) {
        runs[2].error = e.what();
    }

    // projection: ellipse-family envelope stretched back onto the circle family
    try {
        EnvelopeCurve fe_env = classical_envelope(fe, cfg);
        std::vector<BoundaryPoint> pts;
        for (const auto& p : fe_env.points) {
            const Point2 img = stretch_x({p.x, p.y}, kSqrt2);
            pts.push_back({img.x, img.y, p.alpha * kSqrt2, Method::projection});
        }
        runs[3].residual =
            assemble_envelope(std::move(pts), Method::projection, &eq2).max_abs_residual;
        for (double a : matched_alphas) {
            auto p = classical_point_for_alpha(fe, a / kSqrt2, cfg);
            if (p) {
                const Point2 img = stretch_x({p->upper.x, p->upper.y}, kSqrt2);
                runs[3].matched.push_back(img);
            } else {
                runs[3].matched.push_back(std::nullopt);
            }
        }
    } catch (const std::exception& e) {
        runs[3].error = e.what();
    }

    CompareReport report;
    for (size_t i = 0; i < runs.size(); ++i) {
        CompareEntry e;
        e.name = names[i] + " residual";
        e.value = runs[i].residual;
        e.tolerance = tol_override.value_or(method_tol(names[i]));
        e.error = runs[i].error;
        e.pass = e.error.empty() && (e.value <= e.tolerance);
        report.entries.push_back(std::move(e));
    }
    for (size_t i = 0; i < runs.size(); ++i) {
        for (size_t j = i + 1; j < runs.size(); ++j) {
            CompareEntry e;
            e.name = names[i] + ":" + names[j] + " distance";
            e.tolerance =
                tol_override.value_or(std::fmax(method_tol(names[i]), method_tol(names[j])));
            if (!runs[i].error.empty() || !runs[j].error.empty()) {
                e.value = std::numeric_limits<double>::quiet_NaN();
                e.error = "method unavailable";
                e.pass = false;
            } else {
                double worst = 0.0;
                for (size_t k = 0; k < matched_alphas.size(); ++k) {
                    const auto& a = runs[i].matched[k];
                    const auto& b = runs[j].matched[k];
                    if (a.has_value() != b.has_value()) {
                        worst = std::numeric_limits<double>::quiet_NaN();
                        break;
                    }
                    if (a && b) worst = std::fmax(worst, distance(*a, *b));
                }
                e.value = worst;
                e.pass = worst <= e.tolerance;
            }
            report.entries.push_back(std::move(e));
        }
    }
    report.pass = true;
    for (const auto& e : report.entries) report.pass = report.pass && e.pass;
    return report;
}

std::string format_report(const CompareReport& report) {
    std::ostringstream out;
    for (const auto& e : report.entries) {
        out << (e.pass ? "PASS" : "FAIL") << "  " << e.name << "  value=" << format_double(e.value)
            << "  tol=" << format_double(e.tolerance);
        if (!e.error.empty()) out << "  error=" << e.error;
        out << '\n';
    }
    out << (report.pass ? "overall PASS" : "overall FAIL") << '\n';
    return out.str();
}

}  // namespace envelope
