#pragma once

#include <functional>
#include <optional>
#include <utility>

namespace envelope {

struct RootResult {
    double x = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Root of f on [lo, hi], where f(lo) and f(hi) have opposite signs (or one
/// endpoint is already a root). Bisection narrows the bracket; Newton steps
/// with a central-difference derivative are taken whenever they stay inside
/// the bracket. Stops when the step or bracket width falls below tol.
RootResult find_root(const std::function<double(double)>& f, double lo, double hi,
                     double tol = 1e-14, int max_iter = 80);

/// First sign-change cell of f over [lo, hi] scanned with `cells` uniform
/// cells. Endpoints count as roots when |f| vanishes there.
std::optional<std::pair<double, double>> scan_bracket(const std::function<double(double)>& f,
                                                      double lo, double hi, int cells);

/// Argmax of a unimodal f on [lo, hi]: golden-section until the bracket is
/// narrower than coarse_tol, then one three-point parabolic refinement with
/// step h (the parabola vertex beats value-comparison search once f is flat
/// near the maximum).
double maximize_unimodal(const std::function<double(double)>& f, double lo, double hi,
                         double coarse_tol = 1e-6, double h = 1e-5);

}  // namespace envelope
