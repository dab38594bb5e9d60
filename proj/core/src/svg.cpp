#include "envelope/svg.hpp"

#include <fstream>

#include "envelope/csv.hpp"

namespace envelope {

namespace {

constexpr double kCanvasW = 600.0;
constexpr double kCanvasH = 400.0;

struct Mapper {
    SvgView view;
    double px(double x) const { return (x - view.xmin) / (view.xmax - view.xmin) * kCanvasW; }
    double py(double y) const { return (view.ymax - y) / (view.ymax - view.ymin) * kCanvasH; }
};

void write_polyline(std::ofstream& out, const Mapper& m, const std::vector<Point2>& pts,
                    const char* stroke, const char* width) {
    if (pts.empty()) return;
    out << "<polyline points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i > 0) out << ' ';
        out << format_double(m.px(pts[i].x)) << ',' << format_double(m.py(pts[i].y));
    }
    // close the loop
    out << ' ' << format_double(m.px(pts[0].x)) << ',' << format_double(m.py(pts[0].y));
    out << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\"/>\n";
}

}  // namespace

void emit_svg(const std::vector<CurveSampleTable>& tables,
              const std::vector<EnvelopeCurve>& envelopes, const std::string& path,
              const SvgView& view) {
    size_t total = envelopes.size();
    for (const auto& t : tables) total += t.rows.size();
    if (total == 0) throw std::invalid_argument("emit_svg: nothing to draw");
    if (!(view.xmax > view.xmin) || !(view.ymax > view.ymin)) {
        throw std::invalid_argument("emit_svg: degenerate view bounds");
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("emit_svg: cannot open for writing", path);
    Mapper m{view};
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"400\" "
           "viewBox=\"0 0 600 400\">\n";
    out << "<rect width=\"600\" height=\"400\" fill=\"white\"/>\n";
    for (const auto& table : tables) {
        // one polyline per run of rows sharing (alpha, method)
        std::vector<Point2> member;
        for (size_t i = 0; i < table.rows.size(); ++i) {
            const auto& row = table.rows[i];
            member.push_back({row.x, row.y});
            const bool last = (i + 1 == table.rows.size());
            if (last || table.rows[i + 1].alpha != row.alpha ||
                table.rows[i + 1].method != row.method) {
                write_polyline(out, m, member, "#888888", "0.5");
                member.clear();
            }
        }
    }
    for (const auto& env : envelopes) {
        std::vector<Point2> pts;
        pts.reserve(env.points.size());
        for (const auto& p : env.points) pts.push_back({p.x, p.y});
        write_polyline(out, m, pts, "#000000", "1.5");
    }
    out << "</svg>\n";
    out.flush();
    if (!out) throw IoError("emit_svg: write failed", path);
}

}  // namespace envelope
