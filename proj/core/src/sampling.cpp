#include "envelope/sampling.hpp"

#include <stdexcept>

namespace envelope {

CurveSampleTable sample_family(const ImplicitFamily& family, int member_count,
                               int points_per_member) {
    if (member_count < 1) {
        throw std::invalid_argument("sample_family: member_count must be >= 1");
    }
    if (points_per_member < 8) {
        throw std::invalid_argument("sample_family: points_per_member must be >= 8");
    }
    CurveSampleTable table;
    table.rows.reserve(static_cast<size_t>(member_count) * points_per_member);
    for (int i = 0; i < member_count; ++i) {
        const double alpha =
            (member_count == 1)
                ? 0.5 * (family.alpha_min + family.alpha_max)
                : family.alpha_min +
                      (family.alpha_max - family.alpha_min) * i / (member_count - 1);
        for (const Point2& p : trace_member(family, alpha, points_per_member)) {
            table.rows.push_back({p.x, p.y, alpha, family.name});
        }
    }
    return table;
}

CurveSampleTable envelope_to_table(const EnvelopeCurve& curve) {
    CurveSampleTable table;
    table.rows.reserve(curve.points.size());
    for (const auto& p : curve.points) {
        table.rows.push_back({p.x, p.y, p.alpha, method_name(p.method)});
    }
    return table;
}

CurveSampleTable sample_null_isocline(const ImplicitFamily& family, int member_count) {
    if (member_count < 1) {
        throw std::invalid_argument("sample_null_isocline: member_count must be >= 1");
    }
    CurveSampleTable table;
    for (int i = 0; i < member_count; ++i) {
        const double alpha =
            (member_count == 1)
                ? 0.5 * (family.alpha_min + family.alpha_max)
                : family.alpha_min +
                      (family.alpha_max - family.alpha_min) * i / (member_count - 1);
        for (const Point2& p : null_isocline_points(family, alpha)) {
            table.rows.push_back({p.x, p.y, alpha, "isocline"});
        }
    }
    return table;
}

}  // namespace envelope
