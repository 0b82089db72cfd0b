// Command-line front end: thin dispatch over the library with deterministic
// CSV/JSON/SVG/PPM serialization. Exit codes: 0 success, 1 I/O failure,
// 2 invalid input, 3 numerical failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "trisync/basin.hpp"
#include "trisync/errors.hpp"
#include "trisync/fixed_points.hpp"
#include "trisync/io.hpp"
#include "trisync/manifolds.hpp"
#include "trisync/maps.hpp"
#include "trisync/nullclines.hpp"
#include "trisync/params.hpp"
#include "trisync/simulate.hpp"
#include "trisync/symmetry.hpp"

namespace {

using nlohmann::ordered_json;
using namespace trisync;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr double deg_per_rad = 180.0 / pi;

struct CommonOpts {
    double a = 0.0;
    std::string output = "-";
    std::string json_meta;
    bool degrees = false;

    double in(double v) const { return degrees ? v / deg_per_rad : v; }
    double out(double v) const { return degrees ? v * deg_per_rad : v; }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--a", opts.a, "coupling gain, 0 < a < 1/6")->required();
    cmd->add_option("-o,--output", opts.output, "output path, '-' for stdout");
    cmd->add_option("--json-meta", opts.json_meta, "write the resolved config as JSON to this path");
    cmd->add_flag("--degrees", opts.degrees, "angles in degrees at the I/O boundary");
}

void write_file(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout.write(content.data(), std::streamsize(content.size()));
        std::cout.flush();
        if (!std::cout) throw IoError("write to stdout failed");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    out.write(content.data(), std::streamsize(content.size()));
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

void maybe_write_meta(const CommonOpts& opts, ordered_json meta) {
    if (opts.json_meta.empty()) return;
    meta["output"] = opts.output;
    meta["degrees"] = opts.degrees;
    write_file(opts.json_meta, meta.dump(2) + "\n");
}

std::string csv_cell(double v) { return io::format_double(v); }

// ---- iterate ---------------------------------------------------------------

struct IterateOpts {
    CommonOpts common;
    double x0 = 0.0, y0 = 0.0;
    std::uint64_t n = 100;
    std::string format = "csv";
};

void run_iterate(const IterateOpts& o) {
    const CouplingParams params(o.common.a);
    PhasePoint p{o.common.in(o.x0), o.common.in(o.y0)};

    std::vector<PhasePoint> orbit;
    orbit.reserve(o.n + 1);
    orbit.push_back(p);
    for (std::uint64_t i = 0; i < o.n; ++i) orbit.push_back(p = apply_line_map(orbit.back(), params));

    std::string content;
    if (o.format == "csv") {
        content = "step,x,y\n";
        for (std::uint64_t i = 0; i < orbit.size(); ++i)
            content += std::to_string(i) + "," + csv_cell(o.common.out(orbit[i].x)) + "," +
                       csv_cell(o.common.out(orbit[i].y)) + "\n";
    } else if (o.format == "json") {
        ordered_json rows = ordered_json::array();
        for (std::uint64_t i = 0; i < orbit.size(); ++i)
            rows.push_back({{"step", i},
                            {"x", o.common.out(orbit[i].x)},
                            {"y", o.common.out(orbit[i].y)}});
        content = rows.dump(2) + "\n";
    } else {
        throw std::invalid_argument("iterate: unsupported format '" + o.format + "'");
    }
    write_file(o.common.output, content);

    maybe_write_meta(o.common, {{"subcommand", "iterate"},
                                {"a", o.common.a},
                                {"x0", o.x0},
                                {"y0", o.y0},
                                {"n", o.n},
                                {"format", o.format}});
}

// ---- fixed-points ----------------------------------------------------------

struct FixedPointsOpts {
    CommonOpts common;
    long lmin = 0, lmax = 0, kmin = 0, kmax = 0;
};

void run_fixed_points(const FixedPointsOpts& o) {
    if (o.lmin > o.lmax || o.kmin > o.kmax)
        throw std::invalid_argument("fixed-points: empty index range");
    const CouplingParams params(o.common.a);

    ordered_json rows = ordered_json::array();
    for (const FixedPointInfo& info : fixed_points(params, o.lmin, o.lmax, o.kmin, o.kmax)) {
        rows.push_back({{"family", std::string(family_name(info.family))},
                        {"l", info.l},
                        {"k", info.k},
                        {"x", o.common.out(info.location.x)},
                        {"y", o.common.out(info.location.y)},
                        {"eigenvalues", {info.eigenvalues[0], info.eigenvalues[1]}},
                        {"class", std::string(stability_name(info.stability))}});
    }
    write_file(o.common.output, rows.dump(2) + "\n");

    maybe_write_meta(o.common, {{"subcommand", "fixed-points"},
                                {"a", o.common.a},
                                {"lmin", o.lmin},
                                {"lmax", o.lmax},
                                {"kmin", o.kmin},
                                {"kmax", o.kmax}});
}

// ---- nullclines ------------------------------------------------------------

struct NullclinesOpts {
    CommonOpts common;
    std::vector<double> window;  // empty: one full period
    int resolution = 512;
    std::string svg;
};

Window resolve_window(const std::vector<double>& v, const CommonOpts& c) {
    if (v.empty()) return {0.0, two_pi, 0.0, two_pi};
    return {c.in(v[0]), c.in(v[1]), c.in(v[2]), c.in(v[3])};
}

ordered_json window_meta(const Window& w, const CommonOpts& c) {
    return {c.out(w.xmin), c.out(w.xmax), c.out(w.ymin), c.out(w.ymax)};
}

void run_nullclines(const NullclinesOpts& o) {
    CouplingParams params(o.common.a);  // validates the gain; the curves do not use it
    const Window window = resolve_window(o.window, o.common);
    const std::vector<Curve2D> curves = nullclines(window, o.resolution);

    std::string content = "curve,tag,index,x,y\n";
    for (std::size_t c = 0; c < curves.size(); ++c) {
        const char* tag =
            curves[c].tag == CurveTag::nullcline_vertical ? "x_nullcline" : "y_nullcline";
        for (std::size_t i = 0; i < curves[c].vertices.size(); ++i)
            content += std::to_string(c) + "," + tag + "," + std::to_string(i) + "," +
                       csv_cell(o.common.out(curves[c].vertices[i].x)) + "," +
                       csv_cell(o.common.out(curves[c].vertices[i].y)) + "\n";
    }
    write_file(o.common.output, content);

    if (!o.svg.empty()) {
        io::SvgDocument svg(window, 800, 800);
        for (const Curve2D& curve : curves)
            svg.add_polyline(curve.vertices,
                             curve.tag == CurveTag::nullcline_vertical ? "#4477aa" : "#ee6677",
                             1.5);
        for (const FixedPointInfo& info : fixed_points(params, -2, 2, -2, 2))
            if (window.contains(info.location)) svg.add_circle(info.location, 4.0, "#222222");
        write_file(o.svg, svg.str());
    }

    maybe_write_meta(o.common, {{"subcommand", "nullclines"},
                                {"a", o.common.a},
                                {"window", window_meta(window, o.common)},
                                {"resolution", o.resolution},
                                {"svg", o.svg}});
}

// ---- separatrix ------------------------------------------------------------

struct SeparatrixOpts {
    CommonOpts common;
    double seed_offset = 1e-4;
    double arc_step = 1e-3;
    std::string svg;
};

void run_separatrix(const SeparatrixOpts& o) {
    const CouplingParams params(o.common.a);
    const SeparatrixCurve sep = build_separatrix(params, o.seed_offset, o.arc_step);

    std::string content = "index,x,y\n";
    for (std::size_t i = 0; i < sep.eta.vertices.size(); ++i)
        content += std::to_string(i) + "," + csv_cell(o.common.out(sep.eta.vertices[i].x)) + "," +
                   csv_cell(o.common.out(sep.eta.vertices[i].y)) + "\n";
    write_file(o.common.output, content);

    if (!o.svg.empty()) {
        // exactly two curve paths (eta and the square boundary) plus markers
        const InvariantSquare square{1, 0};
        const auto corners = square.vertices();
        Window world{-0.4, two_pi + 0.4, -pi - 0.4, pi + 0.4};
        io::SvgDocument svg(world, 900, 900);
        svg.add_polyline({corners.begin(), corners.end()}, "#999999", 1.0, /*close=*/true);
        svg.add_polyline(sep.eta.vertices, "#1f77b4", 1.5);
        for (const PhasePoint& corner : corners) svg.add_circle(corner, 4.0, "#d62728");
        svg.add_circle(sep.saddle, 4.0, "#d62728");
        write_file(o.svg, svg.str());
    }

    maybe_write_meta(o.common, {{"subcommand", "separatrix"},
                                {"a", o.common.a},
                                {"seed_offset", o.seed_offset},
                                {"arc_step", o.arc_step},
                                {"svg", o.svg}});
}

// ---- basin -----------------------------------------------------------------

struct BasinOpts {
    CommonOpts common;
    std::vector<double> window;  // empty: one full period
    int nx = 256, ny = 256;
    double eps = 1e-6;
    std::uint32_t n_max = 100000;
    unsigned threads = 0;
};

void run_basin(const BasinOpts& o) {
    if (o.common.output == "-")
        throw std::invalid_argument("basin: --output must be a file path (binary PPM)");
    const CouplingParams params(o.common.a);
    const Window window = resolve_window(o.window, o.common);
    const BasinRaster raster =
        rasterize_basin(window, o.nx, o.ny, params, o.eps, o.n_max, o.threads);

    // Fixed palette keyed on the parity of the attractor index relative to
    // the window origin, so a window translated by a full period renders to
    // the identical pixel field.
    const long l_ref = std::llround(window.xmin / two_pi);
    const long k_ref = std::llround(window.ymin / two_pi);
    static constexpr io::Rgb palette[4] = {
        {68, 119, 170},   // even, even
        {238, 119, 51},   // odd,  even
        {34, 136, 51},    // even, odd
        {204, 51, 17},    // odd,  odd
    };

    std::vector<io::Rgb> pixels;
    pixels.reserve(std::size_t(o.nx) * o.ny);
    for (int j = o.ny - 1; j >= 0; --j) {
        for (int i = 0; i < o.nx; ++i) {
            const BasinRaster::Cell& cell = raster.at(i, j);
            if (cell.label < 0) {
                pixels.push_back({0, 0, 0});
            } else {
                const int pl = int(((cell.l - l_ref) % 2 + 2) % 2);
                const int pk = int(((cell.k - k_ref) % 2 + 2) % 2);
                pixels.push_back(palette[pl + 2 * pk]);
            }
        }
    }

    std::ostringstream ppm;
    io::write_ppm(ppm, o.nx, o.ny, pixels);
    write_file(o.common.output, ppm.str());

    std::string csv = "i,j,x,y,label,iterations\n";
    for (int j = 0; j < o.ny; ++j)
        for (int i = 0; i < o.nx; ++i) {
            const BasinRaster::Cell& cell = raster.at(i, j);
            const PhasePoint center = raster.center(i, j);
            csv += std::to_string(i) + "," + std::to_string(j) + "," +
                   csv_cell(o.common.out(center.x)) + "," + csv_cell(o.common.out(center.y)) +
                   "," + std::to_string(cell.label) + "," + std::to_string(cell.iterations) + "\n";
        }
    const std::string csv_path =
        std::filesystem::path(o.common.output).replace_extension(".csv").string();
    write_file(csv_path, csv);

    maybe_write_meta(o.common, {{"subcommand", "basin"},
                                {"a", o.common.a},
                                {"window", window_meta(window, o.common)},
                                {"nx", o.nx},
                                {"ny", o.ny},
                                {"eps", o.eps},
                                {"n_max", o.n_max},
                                {"threads", o.threads},
                                {"csv", csv_path}});
}

// ---- simulate --------------------------------------------------------------

struct SimulateOpts {
    CommonOpts common;
    double x0 = 0.0, y0 = 0.0;
    bool have_x0 = false, have_y0 = false;
    std::uint64_t n = 100;
    std::string kick_rule = "sine";
    std::uint64_t seed = 0;
};

void run_simulate(const SimulateOpts& o) {
    const CouplingParams params(o.common.a);
    double x0 = o.common.in(o.x0), y0 = o.common.in(o.y0);
    if (!o.have_x0 || !o.have_y0) {
        std::mt19937_64 rng(o.seed);
        std::uniform_real_distribution<double> phase(0.0, two_pi);
        const double rx = phase(rng), ry = phase(rng);
        if (!o.have_x0) x0 = rx;
        if (!o.have_y0) y0 = ry;
    }

    const KickRule rule = kick_rules::by_name(o.kick_rule);
    const auto records = simulate(ensemble_from_differences(x0, y0), params, o.n, rule);
    const auto deviations = stroboscopic_deviation(records, x0, y0, params);

    std::string content = "cycle,x,y,deviation_from_map\n";
    for (std::size_t i = 0; i < records.size(); ++i)
        content += std::to_string(records[i].cycle) + "," + csv_cell(o.common.out(records[i].x)) +
                   "," + csv_cell(o.common.out(records[i].y)) + "," +
                   csv_cell(o.common.out(deviations[i])) + "\n";
    write_file(o.common.output, content);

    maybe_write_meta(o.common, {{"subcommand", "simulate"},
                                {"a", o.common.a},
                                {"x0", x0},
                                {"y0", y0},
                                {"n", o.n},
                                {"kick_rule", o.kick_rule},
                                {"seed", o.seed}});
}

// ---- check-symmetry --------------------------------------------------------

struct CheckSymmetryOpts {
    CommonOpts common;
    int samples = 1000;
    int compositions = 50;
    std::uint64_t seed = 0;
};

ordered_json transform_json(const SymmetryTransform& t) {
    return {{"linear", std::string(linear_part_name(t.linear()))}, {"l", t.l()}, {"k", t.k()}};
}

void run_check_symmetry(const CheckSymmetryOpts& o) {
    if (o.samples < 1) throw std::invalid_argument("check-symmetry: samples must be positive");
    const CouplingParams params(o.common.a);

    std::vector<SymmetryTransform> transforms = {
        SymmetryTransform::translation(1, 0),
        SymmetryTransform::translation(0, 1),
        SymmetryTransform::translation(-2, 3),
        SymmetryTransform::rotation_pi(),
        SymmetryTransform::diagonal_reflection(),
        SymmetryTransform::antidiagonal_reflection(),
        InvariantSquare{1, 0}.centroid_rotation(),
    };

    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> pick_linear(0, 3);
    std::uniform_int_distribution<long> pick_index(-3, 3);
    const LinearPart parts[4] = {LinearPart::identity, LinearPart::rotation_pi,
                                 LinearPart::diagonal_reflection,
                                 LinearPart::antidiagonal_reflection};
    for (int c = 0; c < o.compositions; ++c) {
        const SymmetryTransform lhs(parts[pick_linear(rng)], pick_index(rng), pick_index(rng));
        const SymmetryTransform rhs(parts[pick_linear(rng)], pick_index(rng), pick_index(rng));
        transforms.push_back(lhs.compose(rhs));
    }

    ordered_json rows = ordered_json::array();
    double overall = 0.0;
    for (std::size_t i = 0; i < transforms.size(); ++i) {
        const double dev =
            check_equivariance(transforms[i], params, o.samples, o.seed + 0x9e3779b9ull * i);
        overall = std::max(overall, dev);
        rows.push_back({{"transform", transform_json(transforms[i])}, {"max_deviation", dev}});
    }

    ordered_json report{{"a", o.common.a},
                        {"samples", o.samples},
                        {"compositions", o.compositions},
                        {"seed", o.seed},
                        {"max_deviation", overall},
                        {"results", rows}};
    write_file(o.common.output, report.dump(2) + "\n");

    maybe_write_meta(o.common, {{"subcommand", "check-symmetry"},
                                {"a", o.common.a},
                                {"samples", o.samples},
                                {"compositions", o.compositions},
                                {"seed", o.seed}});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"phase-difference dynamics of three pulse-coupled clocks"};
    app.require_subcommand(1);
    app.set_config("--config")->configurable(false);

    IterateOpts iterate_opts;
    CLI::App* cmd_iterate = app.add_subcommand("iterate", "iterate the chain map from a start point");
    add_common(cmd_iterate, iterate_opts.common);
    cmd_iterate->add_option("--x0", iterate_opts.x0, "initial x")->required();
    cmd_iterate->add_option("--y0", iterate_opts.y0, "initial y")->required();
    cmd_iterate->add_option("--n", iterate_opts.n, "number of steps");
    cmd_iterate->add_option("--format", iterate_opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    FixedPointsOpts fp_opts;
    CLI::App* cmd_fp = app.add_subcommand("fixed-points", "enumerate fixed point families");
    add_common(cmd_fp, fp_opts.common);
    cmd_fp->add_option("--lmin", fp_opts.lmin);
    cmd_fp->add_option("--lmax", fp_opts.lmax);
    cmd_fp->add_option("--kmin", fp_opts.kmin);
    cmd_fp->add_option("--kmax", fp_opts.kmax);

    NullclinesOpts nc_opts;
    CLI::App* cmd_nc = app.add_subcommand("nullclines", "extract nullcline curves in a window");
    add_common(cmd_nc, nc_opts.common);
    cmd_nc->add_option("--window", nc_opts.window, "xmin xmax ymin ymax")->expected(4);
    cmd_nc->add_option("--resolution", nc_opts.resolution, "grid cells per axis (>= 16)");
    cmd_nc->add_option("--svg", nc_opts.svg, "also render an SVG overview to this path");

    SeparatrixOpts sep_opts;
    CLI::App* cmd_sep = app.add_subcommand("separatrix", "saddle separatrix across its square");
    add_common(cmd_sep, sep_opts.common);
    cmd_sep->add_option("--seed-offset", sep_opts.seed_offset, "manifold seeding distance");
    cmd_sep->add_option("--arc-step", sep_opts.arc_step, "vertex spacing bound");
    cmd_sep->add_option("--svg", sep_opts.svg, "also render an SVG overlay to this path");

    BasinOpts basin_opts;
    CLI::App* cmd_basin = app.add_subcommand("basin", "rasterize basins of attraction");
    add_common(cmd_basin, basin_opts.common);
    cmd_basin->add_option("--window", basin_opts.window, "xmin xmax ymin ymax")->expected(4);
    cmd_basin->add_option("--nx", basin_opts.nx, "raster width in cells");
    cmd_basin->add_option("--ny", basin_opts.ny, "raster height in cells");
    cmd_basin->add_option("--eps", basin_opts.eps, "attractor capture distance");
    cmd_basin->add_option("--n-max", basin_opts.n_max, "iteration budget per cell");
    cmd_basin->add_option("--threads", basin_opts.threads, "worker threads (0 = hardware)");

    SimulateOpts sim_opts;
    CLI::App* cmd_sim = app.add_subcommand("simulate", "event-driven three-clock simulation");
    add_common(cmd_sim, sim_opts.common);
    CLI::Option* optx = cmd_sim->add_option("--x0", sim_opts.x0, "initial left-center difference");
    CLI::Option* opty = cmd_sim->add_option("--y0", sim_opts.y0, "initial right-center difference");
    cmd_sim->add_option("--n", sim_opts.n, "cycles to record");
    cmd_sim->add_option("--kick-rule", sim_opts.kick_rule, "sine or none");
    cmd_sim->add_option("--seed", sim_opts.seed, "seed for sampling missing initials");

    CheckSymmetryOpts sym_opts;
    CLI::App* cmd_sym = app.add_subcommand("check-symmetry", "measure equivariance deviations");
    add_common(cmd_sym, sym_opts.common);
    cmd_sym->add_option("--samples", sym_opts.samples, "sample points per transform");
    cmd_sym->add_option("--compositions", sym_opts.compositions, "random composed transforms");
    cmd_sym->add_option("--seed", sym_opts.seed, "RNG seed");

    try {
        app.parse(argc, argv);

        if (cmd_iterate->parsed()) run_iterate(iterate_opts);
        if (cmd_fp->parsed()) run_fixed_points(fp_opts);
        if (cmd_nc->parsed()) run_nullclines(nc_opts);
        if (cmd_sep->parsed()) run_separatrix(sep_opts);
        if (cmd_basin->parsed()) run_basin(basin_opts);
        if (cmd_sim->parsed()) {
            sim_opts.have_x0 = optx->count() > 0;
            sim_opts.have_y0 = opty->count() > 0;
            run_simulate(sim_opts);
        }
        if (cmd_sym->parsed()) run_check_symmetry(sym_opts);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
