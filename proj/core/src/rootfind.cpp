#include "envelope/rootfind.hpp"

#include <cmath>
#include <stdexcept>

namespace envelope {

RootResult find_root(const std::function<double(double)>& f, double lo, double hi,
                     double tol, int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return {lo, 0, true};
    if (fhi == 0.0) return {hi, 0, true};
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw std::invalid_argument("find_root: root not bracketed");
    }

    double x = 0.5 * (lo + hi);
    for (int i = 0; i < max_iter; ++i) {
        double fx = f(x);
        if (fx == 0.0) return {x, i + 1, true};
        // shrink the bracket around the sign change
        if ((fx > 0.0) == (fhi > 0.0)) {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            flo = fx;
        }
        double width = hi - lo;
        if (width < tol) return {0.5 * (lo + hi), i + 1, true};

        // Newton trial with central-difference slope
        double h = std::fmax(1e-7, 1e-7 * std::fabs(x));
        double d = (f(x + h) - f(x - h)) / (2.0 * h);
        double xn = (d != 0.0) ? x - fx / d : lo;
        if (d != 0.0 && xn > lo && xn < hi) {
            if (std::fabs(xn - x) < tol) return {xn, i + 1, true};
            x = xn;
        } else {
            x = 0.5 * (lo + hi);
        }
    }
    return {x, max_iter, false};
}

std::optional<std::pair<double, double>> scan_bracket(const std::function<double(double)>& f,
                                                      double lo, double hi, int cells) {
    if (cells < 1) throw std::invalid_argument("scan_bracket: cells must be >= 1");
    double prev_x = lo;
    double prev_f = f(lo);
    if (prev_f == 0.0) return std::make_pair(lo, lo);
    for (int i = 1; i <= cells; ++i) {
        double x = lo + (hi - lo) * static_cast<double>(i) / cells;
        double fx = f(x);
        if (fx == 0.0) return std::make_pair(x, x);
        if ((prev_f > 0.0) != (fx > 0.0)) return std::make_pair(prev_x, x);
        prev_x = x;
        prev_f = fx;
    }
    return std::nullopt;
}

double maximize_unimodal(const std::function<double(double)>& f, double lo, double hi,
                         double coarse_tol, double h) {
    static const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > coarse_tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    double v = 0.5 * (a + b);
    // parabolic vertex through (v-h, v, v+h)
    for (int pass = 0; pass < 2; ++pass) {
        double fm = f(v - h), f0 = f(v), fp = f(v + h);
        if (!std::isfinite(fm) || !std::isfinite(f0) || !std::isfinite(fp)) break;
        double denom = fp - 2.0 * f0 + fm;
        if (denom >= 0.0) break;  // not locally concave at this scale
        double step = -0.5 * h * (fp - fm) / denom;
        if (std::fabs(step) > 2.0 * h) break;
        v += step;
        h *= 0.1;
    }
    if (v < lo) v = lo;
    if (v > hi) v = hi;
    return v;
}

}  // namespace envelope
