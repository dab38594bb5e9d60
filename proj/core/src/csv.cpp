#include "envelope/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>

namespace envelope {

namespace {
const char* kHeader = "x,y,alpha,method";

double parse_field(const std::string& s, size_t lineno) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::runtime_error("parse_csv: bad numeric field '" + s + "' on line " +
                                 std::to_string(lineno));
    }
    return v;
}

// membership tolerance by method tag; the limit method's extrapolated points
// carry the loosest bound
double membership_tol(const std::string& method) {
    return method == "limit" ? 1e-6 : 1e-9;
}

void spot_check_row(const CurveSampleTable::Row& row, size_t lineno) {
    // the tag does not always pin the generating family, so accept the best
    // fit among the known ones
    double best = std::numeric_limits<double>::infinity();
    const ImplicitFamily* families[] = {&circle_family(), &ellipse_family()};
    for (const auto* fam : families) {
        if (row.alpha < fam->alpha_min || row.alpha > fam->alpha_max) continue;
        best = std::fmin(best, std::fabs(fam->residual_fn(row.x, row.y, row.alpha)));
    }
    if (!(best <= membership_tol(row.method))) {
        throw std::runtime_error("parse_csv: row on line " + std::to_string(lineno) +
                                 " fails its membership check (residual " +
                                 format_double(best) + ")");
    }
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) return "0";
    return std::string(buf, ptr);
}

void emit_csv(const CurveSampleTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("emit_csv: cannot open for writing", path);
    out << kHeader << '\n';
    for (const auto& row : table.rows) {
        out << format_double(row.x) << ',' << format_double(row.y) << ','
            << format_double(row.alpha) << ',' << row.method << '\n';
    }
    out.flush();
    if (!out) throw IoError("emit_csv: write failed", path);
}

CurveSampleTable parse_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("parse_csv: cannot open", path);
    std::string line;
    if (!std::getline(in, line) || line != kHeader) {
        throw std::runtime_error("parse_csv: missing or malformed header in " + path);
    }
    CurveSampleTable table;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string fx, fy, fa, fm;
        if (!std::getline(ss, fx, ',') || !std::getline(ss, fy, ',') ||
            !std::getline(ss, fa, ',') || !std::getline(ss, fm)) {
            throw std::runtime_error("parse_csv: malformed row on line " +
                                     std::to_string(lineno));
        }
        table.rows.push_back(
            {parse_field(fx, lineno), parse_field(fy, lineno), parse_field(fa, lineno), fm});
        if (table.rows.size() % 64 == 1) {
            spot_check_row(table.rows.back(), lineno);
        }
    }
    return table;
}

}  // namespace envelope
