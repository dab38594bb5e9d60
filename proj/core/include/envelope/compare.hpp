#pragma once

#include <optional>
#include <string>
#include <vector>

namespace envelope {

struct CompareEntry {
    std::string name;
    double value = 0.0;       // NaN when the method failed to run
    double tolerance = 0.0;
    bool pass = false;
    std::string error;        // non-empty when a method threw
};

/// Cross-method agreement report: per-method worst residual against the
/// analytic envelope, plus worst pairwise point distance at matched member
/// parameters. pass is true iff every recorded value is within its tolerance.
struct CompareReport {
    std::vector<CompareEntry> entries;
    bool pass = false;
};

/// Runs all four methods on the circle family (the projection method through
/// the ellipse-family composition) and compares them. Default tolerances:
/// classical/radial/projection 1e-9, limit 1e-6; tol_override replaces all of
/// them. Per-method failures are recorded in the report without aborting the
/// remaining methods. Both grids must be >= 16.
CompareReport compare_methods(int theta_grid_n, int alpha_grid_n,
                              std::optional<double> tol_override = std::nullopt);

/// One line per entry plus an overall verdict, fixed formatting.
std::string format_report(const CompareReport& report);

}  // namespace envelope
