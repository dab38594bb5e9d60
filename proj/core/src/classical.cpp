#include "envelope/classical.hpp"

#include <cmath>
#include <functional>

#include "envelope/rootfind.hpp"

namespace envelope {

double d_residual_d_alpha(const ImplicitFamily& family, double x, double y, double alpha,
                          const ClassicalSolverConfig& cfg) {
    double hi = std::fmin(alpha + cfg.fd_step, family.alpha_max);
    double lo = std::fmax(alpha - cfg.fd_step, family.alpha_min);
    return (family.residual_fn(x, y, hi) - family.residual_fn(x, y, lo)) / (hi - lo);
}

std::optional<BoundaryPair> classical_point_for_alpha(const ImplicitFamily& family, double alpha,
                                                       const ClassicalSolverConfig& cfg) {
    if (alpha < family.alpha_min || alpha > family.alpha_max) {
        throw std::domain_error("classical_point_for_alpha: alpha outside family domain");
    }
    auto interior = member_interior(family, alpha);
    if (!interior) return std::nullopt;  // degenerate member, no tangency point

    auto t_right = ray_to_member(family, alpha, *interior, 0.0);
    auto t_left = ray_to_member(family, alpha, *interior, kPi);
    if (!t_right || !t_left) return std::nullopt;
    const double x_left = interior->x - *t_left;
    const double x_right = interior->x + *t_right;
    const double y_probe = interior->y;

    auto g = [&](double x) { return d_residual_d_alpha(family, x, y_probe, alpha, cfg); };
    auto bracket = scan_bracket(g, x_left, x_right, 64);
    if (!bracket) return std::nullopt;  // member does not contribute
    RootResult rx = find_root(g, bracket->first, bracket->second, cfg.newton_tol,
                              cfg.newton_max_iter);
    if (!rx.converged) {
        throw SolverError("classical_point_for_alpha: x root-find did not converge", alpha);
    }
    const double xb = rx.x;

    // f = 0 in y through the tangency abscissa, upward and downward from the
    // interior line
    auto fy = [&](double y) { return family.residual_fn(xb, y, alpha); };
    double f0 = fy(y_probe);
    if (f0 > 0.0) return std::nullopt;  // abscissa line misses the member

    auto solve_y = [&](double dir) -> double {
        double span = 0.125;
        while (fy(y_probe + dir * span) < 0.0) {
            span *= 2.0;
            if (span > 16.0) {
                throw SolverError("classical_point_for_alpha: member unbounded in y", alpha);
            }
        }
        double lo = std::fmin(y_probe, y_probe + dir * span);
        double hi = std::fmax(y_probe, y_probe + dir * span);
        RootResult ry = find_root(fy, lo, hi, cfg.newton_tol, cfg.newton_max_iter);
        if (!ry.converged) {
            throw SolverError("classical_point_for_alpha: y root-find did not converge", alpha);
        }
        return ry.x;
    };

    double y_up, y_down;
    if (f0 == 0.0) {
        y_up = y_down = y_probe;
    } else {
        y_up = solve_y(+1.0);
        y_down = solve_y(-1.0);
    }
    BoundaryPair pair;
    pair.upper = {xb, y_up, alpha, Method::classical};
    pair.lower = {xb, y_down, alpha, Method::classical};
    return pair;
}

EnvelopeCurve classical_envelope(const ImplicitFamily& family, const ClassicalSolverConfig& cfg) {
    std::vector<BoundaryPoint> points;
    const int n = cfg.alpha_grid_n;
    for (int i = 0; i < n; ++i) {
        double alpha = (n == 1) ? 0.5 * (family.alpha_min + family.alpha_max)
                                : family.alpha_min +
                                      (family.alpha_max - family.alpha_min) * i / (n - 1);
        auto pair = classical_point_for_alpha(family, alpha, cfg);
        if (!pair) continue;
        points.push_back(pair->upper);
        if (pair->lower.y != pair->upper.y) points.push_back(pair->lower);
    }
    auto analytic = known_envelope_residual(family);
    return assemble_envelope(std::move(points), Method::classical,
                             analytic ? &*analytic : nullptr);
}

}  // namespace envelope
