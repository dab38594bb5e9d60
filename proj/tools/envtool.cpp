// envtool: envelopes and isoclines of one-parameter implicit curve families.
//
// Subcommands: render-family, envelope, isocline, compare, project.
// Exit codes: 0 success, 1 compare tolerance failure, 2 usage error, 3 I/O error.

#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "envelope/classical.hpp"
#include "envelope/compare.hpp"
#include "envelope/csv.hpp"
#include "envelope/family.hpp"
#include "envelope/limit.hpp"
#include "envelope/projection.hpp"
#include "envelope/radial.hpp"
#include "envelope/sampling.hpp"
#include "envelope/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCompareFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

const envelope::ImplicitFamily& family_by_name(const std::string& name) {
    if (name == "fc") return envelope::circle_family();
    if (name == "fe") return envelope::ellipse_family();
    throw CLI::ValidationError("--family", "must be fc or fe");
}

struct OutputOptions {
    std::string path;
    bool as_csv = true;
    bool as_svg = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--out", out.path, "Output file path")->required();
    auto* csv = cmd->add_flag("--csv", out.as_csv, "Write CSV (default)");
    auto* svg = cmd->add_flag("--svg", out.as_svg, "Write SVG");
    csv->excludes(svg);
    svg->excludes(csv);
}

void write_output(const OutputOptions& out, const envelope::CurveSampleTable& table,
                  const std::vector<envelope::EnvelopeCurve>& envelopes) {
    if (out.as_svg) {
        std::vector<envelope::CurveSampleTable> tables;
        if (!table.rows.empty()) tables.push_back(table);
        envelope::emit_svg(tables, envelopes, out.path);
    } else {
        envelope::CurveSampleTable merged = table;
        for (const auto& env : envelopes) {
            auto t = envelope::envelope_to_table(env);
            merged.rows.insert(merged.rows.end(), t.rows.begin(), t.rows.end());
        }
        envelope::emit_csv(merged, out.path);
    }
}

envelope::EnvelopeCurve envelope_by_method(const std::string& method, const std::string& family,
                                           int n) {
    using namespace envelope;
    if (method == "classical") {
        ClassicalSolverConfig cfg;
        cfg.alpha_grid_n = n;
        return classical_envelope(family_by_name(family), cfg);
    }
    if (family != "fc") {
        throw CLI::ValidationError("--method", method + " supports only --family fc");
    }
    if (method == "radial") {
        return radial_envelope(n);
    }
    if (method == "limit") {
        const auto deltas = default_delta_sequence();
        const double cut = std::sqrt(0.5);
        std::vector<BoundaryPoint> pts;
        for (int j = 0; j < n; ++j) {
            const double a = -cut + 2.0 * cut * (j + 0.5) / n;
            auto p = limit_boundary_point(a, deltas);
            if (!p) continue;
            pts.push_back(p->upper);
            pts.push_back(p->lower);
        }
        static const std::function<double(double, double)> eq2 = [](double x, double y) {
            return analytic_envelope_residual(x, y);
        };
        return assemble_envelope(std::move(pts), Method::limit, &eq2);
    }
    if (method == "projection") {
        ClassicalSolverConfig cfg;
        cfg.alpha_grid_n = n;
        EnvelopeCurve fe_env = classical_envelope(ellipse_family(), cfg);
        std::vector<BoundaryPoint> pts;
        const double sqrt2 = std::sqrt(2.0);
        for (const auto& p : fe_env.points) {
            const Point2 img = stretch_x({p.x, p.y}, sqrt2);
            pts.push_back({img.x, img.y, p.alpha * sqrt2, Method::projection});
        }
        static const std::function<double(double, double)> eq2 = [](double x, double y) {
            return analytic_envelope_residual(x, y);
        };
        return assemble_envelope(std::move(pts), Method::projection, &eq2);
    }
    throw CLI::ValidationError("--method", "must be classical, radial, limit or projection");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Envelopes and isoclines of one-parameter families of implicit plane curves"};
    app.require_subcommand(1);

    std::string family = "fc";
    std::string method = "classical";
    int grid_n = 64;
    double tol = -1.0;  // negative: no override
    OutputOptions render_out, envelope_out, isocline_out, project_out;

    auto* render = app.add_subcommand("render-family", "Sample every family member");
    render->add_option("--family", family, "Family: fc or fe")->check(CLI::IsMember({"fc", "fe"}));
    render->add_option("--n", grid_n, "Number of members")->check(CLI::PositiveNumber);
    add_output_flags(render, render_out);

    auto* env = app.add_subcommand("envelope", "Compute the family envelope");
    env->add_option("--family", family, "Family: fc or fe")->check(CLI::IsMember({"fc", "fe"}));
    env->add_option("--method", method, "classical, radial, limit or projection")
        ->check(CLI::IsMember({"classical", "radial", "limit", "projection"}));
    env->add_option("--n", grid_n, "Grid size")->check(CLI::PositiveNumber);
    add_output_flags(env, envelope_out);

    auto* iso = app.add_subcommand("isocline", "Zero-slope points across members");
    iso->add_option("--family", family, "Family: fc or fe")->check(CLI::IsMember({"fc", "fe"}));
    iso->add_option("--n", grid_n, "Number of members")->check(CLI::PositiveNumber);
    add_output_flags(iso, isocline_out);

    auto* cmp = app.add_subcommand("compare", "Cross-method agreement report");
    cmp->add_option("--n", grid_n, "Grid size for every method")->check(CLI::PositiveNumber);
    cmp->add_option("--tol", tol, "Tolerance override for all checks");

    auto* proj = app.add_subcommand("project", "Latitude-circle shadows of the tilted sphere");
    proj->add_option("--n", grid_n, "Number of latitudes")->check(CLI::PositiveNumber);
    add_output_flags(proj, project_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (render->parsed()) {
            const auto& fam = family_by_name(family);
            auto table = envelope::sample_family(fam, grid_n, 128);
            write_output(render_out, table, {});
        } else if (env->parsed()) {
            auto curve = envelope_by_method(method, family, grid_n);
            write_output(envelope_out, {}, {curve});
        } else if (iso->parsed()) {
            const auto& fam = family_by_name(family);
            auto table = envelope::sample_null_isocline(fam, grid_n);
            write_output(isocline_out, table, {});
        } else if (cmp->parsed()) {
            std::optional<double> override_tol;
            if (tol >= 0.0) override_tol = tol;
            auto report = envelope::compare_methods(grid_n, grid_n, override_tol);
            std::cout << envelope::format_report(report);
            return report.pass ? kExitOk : kExitCompareFail;
        } else if (proj->parsed()) {
            envelope::TiltedSphereConfig config;
            for (int i = 0; i < grid_n; ++i) {
                config.latitude_grid.push_back(
                    (grid_n == 1) ? 0.0 : -envelope::kPi / 2.0 + envelope::kPi * i / (grid_n - 1));
            }
            envelope::CurveSampleTable table;
            for (const auto& pe : envelope::project_family(config)) {
                const double alpha = envelope::fe_member_from_latitude(pe.latitude).alpha;
                for (int k = 0; k < 128; ++k) {
                    const auto p = pe.at(envelope::kTwoPi * k / 128.0);
                    table.rows.push_back({p.x, p.y, alpha, "projection"});
                }
            }
            write_output(project_out, table, {});
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const envelope::IoError& e) {
        std::cerr << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}
