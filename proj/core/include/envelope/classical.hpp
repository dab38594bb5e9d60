#pragma once

#include <optional>
#include <stdexcept>

#include "envelope/family.hpp"

namespace envelope {

struct ClassicalSolverConfig {
    double fd_step = 1e-4;      // central-difference step in alpha
    int alpha_grid_n = 201;     // alpha samples for the envelope sweep
    double newton_tol = 1e-12;
    int newton_max_iter = 50;
};

/// Thrown when the envelope root-find fails to converge; carries the member
/// parameter that was being solved.
struct SolverError : std::runtime_error {
    SolverError(const std::string& msg, double alpha_)
        : std::runtime_error(msg), alpha(alpha_) {}
    double alpha;
};

/// Central-difference estimate of d f / d alpha at (x, y, alpha), with
/// one-sided clamping at the ends of the alpha domain. Error O(fd_step^2).
double d_residual_d_alpha(const ImplicitFamily& family, double x, double y, double alpha,
                          const ClassicalSolverConfig& cfg = {});

/// Fundamental-theorem solve for one member: the root of d f / d alpha = 0 in
/// x over the member's x extent, then the roots of f = 0 in y through that
/// abscissa. Empty when the member contributes no envelope point.
/// Throws SolverError (alpha attached) on non-convergence.
std::optional<BoundaryPair> classical_point_for_alpha(const ImplicitFamily& family, double alpha,
                                                      const ClassicalSolverConfig& cfg = {});

/// Sweeps cfg.alpha_grid_n members across the alpha domain and assembles the
/// contributed points into a closed curve ordered by polar angle, with the
/// residual measured against the family's analytic envelope when known.
EnvelopeCurve classical_envelope(const ImplicitFamily& family,
                                 const ClassicalSolverConfig& cfg = {});

}  // namespace envelope
