#pragma once

#include <string>
#include <vector>

#include "envelope/sampling.hpp"

namespace envelope {

/// World-coordinate window mapped onto the fixed 600x400 canvas.
struct SvgView {
    double xmin = -1.6;
    double xmax = 1.6;
    double ymin = -1.1;
    double ymax = 1.1;
};

/// Standalone vector figure: one closed polyline per family member (stroke
/// width 0.5) and per envelope curve (stroke width 1.5), canvas 600x400,
/// deterministic bytes for fixed input. Consecutive table rows sharing
/// (alpha, method) form one member polyline. Throws std::invalid_argument
/// when there is nothing to draw or the view is degenerate, IoError on file
/// trouble.
void emit_svg(const std::vector<CurveSampleTable>& tables,
              const std::vector<EnvelopeCurve>& envelopes, const std::string& path,
              const SvgView& view = {});

}  // namespace envelope
