#pragma once

#include <string>
#include <vector>

#include "envelope/family.hpp"

namespace envelope {

/// Row-major sample table with the fixed column set x, y, alpha, method.
struct CurveSampleTable {
    struct Row {
        double x = 0.0;
        double y = 0.0;
        double alpha = 0.0;
        std::string method;
    };
    std::vector<Row> rows;
};

/// member_count members at uniform alpha across the family domain, each
/// sampled at points_per_member boundary points (method column = family
/// name). Output is deterministic for fixed inputs. member_count must be
/// >= 1 and points_per_member >= 8.
CurveSampleTable sample_family(const ImplicitFamily& family, int member_count,
                               int points_per_member);

/// Envelope points as table rows (method column = method name).
CurveSampleTable envelope_to_table(const EnvelopeCurve& curve);

/// Zero-slope points of member_count members, tagged "isocline".
CurveSampleTable sample_null_isocline(const ImplicitFamily& family, int member_count);

}  // namespace envelope
