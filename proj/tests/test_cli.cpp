// End-to-end tests of the command-line tool: spawns the real binary (path
// injected as TRISYNC_CLI_PATH) and checks outputs, formats, and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "trisync/geometry.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

const fs::path& scratch_dir() {
    static const fs::path dir = [] {
        const fs::path d = fs::temp_directory_path() / "trisync_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path scratch_file(const std::string& name) { return scratch_dir() / name; }

struct CliResult {
    int code{};
    std::string output;  // captured stdout
};

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out = scratch_file("stdout_" + std::to_string(counter++) + ".txt");
    const std::string cmd =
        std::string(TRISYNC_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    CliResult result;
    result.code = raw == -1 ? -1 : WEXITSTATUS(raw);
    std::ifstream in(out, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    result.output = buf.str();
    return result;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ',')) out.push_back(cell);
    return out;
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("fixed-points emits the catalog as JSON") {
    const CliResult r = run_cli("fixed-points --a 0.13 --lmin -1 --lmax 1 --kmin -1 --kmax 1");
    REQUIRE(r.code == 0);
    const ordered_json rows = ordered_json::parse(r.output);
    REQUIRE(rows.is_array());
    REQUIRE(rows.size() == 36);
    CHECK(rows[0]["family"] == "P0");
    CHECK(rows[0]["l"] == -1);
    CHECK(rows[0]["k"] == -1);
    CHECK(rows[0]["class"] == "source");
    for (const auto& row : rows) {
        CHECK(row.contains("x"));
        CHECK(row.contains("y"));
        CHECK(row["eigenvalues"].size() == 2);
    }

    CHECK(run_cli("fixed-points --a 0.13 --lmin 1 --lmax 0").code == 2);
}

TEST_CASE("invalid input exits with code 2") {
    CHECK(run_cli("iterate --a 0.2 --x0 1 --y0 1").code == 2);   // gain out of range
    CHECK(run_cli("iterate --a 0 --x0 1 --y0 1").code == 2);     // degenerate gain
    CHECK(run_cli("iterate --x0 1 --y0 1").code == 2);           // missing required option
    CHECK(run_cli("bogus-subcommand --a 0.1").code == 2);
    CHECK(run_cli("").code == 2);                                // a subcommand is required
    CHECK(run_cli("iterate --a 0.1 --x0 1 --y0 1 --format yaml").code == 2);
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("iterate reproduces the frozen one-step value; degrees convert at the boundary") {
    const CliResult rad = run_cli("iterate --a 0.1 --x0 1 --y0 1 --n 2");
    REQUIRE(rad.code == 0);
    const auto rad_lines = split_lines(rad.output);
    REQUIRE(rad_lines.size() == 4);
    CHECK(rad_lines[0] == "step,x,y");
    const auto row0 = split_fields(rad_lines[1]);  // step 0 is the initial point
    REQUIRE(row0.size() == 3);
    CHECK(row0[0] == "0");
    CHECK(row0[1] == "1");
    CHECK(row0[2] == "1");
    const auto row1 = split_fields(rad_lines[2]);
    REQUIRE(row1.size() == 3);
    CHECK(row1[0] == "1");
    CHECK(std::stod(row1[1]) == doctest::Approx(1.2524412954423690).epsilon(1e-12));
    CHECK(std::stod(row1[2]) == doctest::Approx(1.2524412954423690).epsilon(1e-12));

    const CliResult deg =
        run_cli("iterate --a 0.1 --degrees --x0 57.29577951308232 --y0 57.29577951308232 --n 2");
    REQUIRE(deg.code == 0);
    const auto deg_lines = split_lines(deg.output);
    REQUIRE(deg_lines.size() == 4);
    const double to_deg = 180.0 / 3.14159265358979323846;
    for (std::size_t i = 1; i < 4; ++i) {
        const auto rf = split_fields(rad_lines[i]);
        const auto df = split_fields(deg_lines[i]);
        CHECK(std::abs(std::stod(df[1]) - std::stod(rf[1]) * to_deg) < 1e-9);
        CHECK(std::abs(std::stod(df[2]) - std::stod(rf[2]) * to_deg) < 1e-9);
    }

    const CliResult json_run = run_cli("iterate --a 0.1 --x0 1 --y0 1 --n 1 --format json");
    REQUIRE(json_run.code == 0);
    const ordered_json rows = ordered_json::parse(json_run.output);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1]["step"] == 1);
    CHECK(std::abs(rows[1]["x"].get<double>() - 1.2524412954423690) < 1e-12);
}

TEST_CASE("json-meta records the resolved configuration") {
    const fs::path out_csv = scratch_file("iterate_meta.csv");
    const fs::path meta = scratch_file("iterate_meta.json");
    const CliResult r = run_cli("iterate --a 0.1 --x0 1 --y0 1 --n 1 -o " + out_csv.string() +
                                " --json-meta " + meta.string());
    REQUIRE(r.code == 0);
    const ordered_json m = ordered_json::parse(slurp(meta));
    CHECK(m["subcommand"] == "iterate");
    CHECK(m["a"].get<double>() == 0.1);
    CHECK(m["n"] == 1);
    CHECK(m["output"] == out_csv.string());
    CHECK(m["degrees"] == false);
}

TEST_CASE("separatrix output is deterministic and spans the square") {
    const fs::path first = scratch_file("sep1.csv");
    const fs::path second = scratch_file("sep2.csv");
    REQUIRE(run_cli("separatrix --a 0.1 -o " + first.string()).code == 0);
    REQUIRE(run_cli("separatrix --a 0.1 -o " + second.string()).code == 0);
    const std::string body = slurp(first);
    CHECK(body == slurp(second));

    const auto rows = split_lines(body);
    REQUIRE(rows.size() > 200);
    CHECK(rows[0] == "index,x,y");
    CHECK(std::abs(std::stod(split_fields(rows[1])[1])) < 1e-5);
    CHECK(std::abs(std::stod(split_fields(rows.back())[1]) - trisync::two_pi) < 1e-5);

    const fs::path svg_path = scratch_file("sep.svg");
    REQUIRE(run_cli("separatrix --a 0.1 -o " + scratch_file("sep3.csv").string() + " --svg " +
                    svg_path.string())
                .code == 0);
    const std::string svg = slurp(svg_path);
    CHECK(count_occurrences(svg, "<path") == 2);
    CHECK(count_occurrences(svg, "<circle") == 5);
}

TEST_CASE("nullclines csv and svg") {
    const fs::path csv_path = scratch_file("nc.csv");
    const fs::path svg_path = scratch_file("nc.svg");
    const CliResult r = run_cli("nullclines --a 0.1 --resolution 64 -o " + csv_path.string() +
                                " --svg " + svg_path.string());
    REQUIRE(r.code == 0);
    const auto rows = split_lines(slurp(csv_path));
    REQUIRE(rows.size() > 10);
    CHECK(rows[0] == "curve,tag,index,x,y");
    bool saw_x = false, saw_y = false;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto f = split_fields(rows[i]);
        REQUIRE(f.size() == 5);
        if (f[1] == "x_nullcline") saw_x = true;
        if (f[1] == "y_nullcline") saw_y = true;
    }
    CHECK(saw_x);
    CHECK(saw_y);
    const std::string svg = slurp(svg_path);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(count_occurrences(svg, "<path") >= 2);
}

TEST_CASE("basin writes a ppm raster with a csv companion") {
    const fs::path ppm_path = scratch_file("basin.ppm");
    const CliResult r = run_cli("basin --a 0.1 --nx 16 --ny 16 --n-max 30000 --threads 2 -o " +
                                ppm_path.string());
    REQUIRE(r.code == 0);

    const std::string ppm = slurp(ppm_path);
    const std::string header = "P6\n16 16\n255\n";
    REQUIRE(ppm.size() == header.size() + 16 * 16 * 3);
    CHECK(ppm.substr(0, header.size()) == header);

    const auto rows = split_lines(slurp(scratch_file("basin.csv")));
    REQUIRE(rows.size() == 257);
    CHECK(rows[0] == "i,j,x,y,label,iterations");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto f = split_fields(rows[i]);
        REQUIRE(f.size() == 6);
        CHECK(f[4] == "0");  // the full-period window decides everywhere
    }

    CHECK(run_cli("basin --a 0.1 --nx 4 --ny 4 -o -").code == 2);
    CHECK(run_cli("basin --a 0.1 --nx 4 --ny 4 -o /nonexistent-dir/x.ppm").code == 1);
}

TEST_CASE("simulate csv and sampled initials") {
    const CliResult r = run_cli("simulate --a 0.1 --x0 2 --y0 3 --n 5 --kick-rule none");
    REQUIRE(r.code == 0);
    const auto rows = split_lines(r.output);
    REQUIRE(rows.size() == 7);  // header + cycles 0..5
    CHECK(rows[0] == "cycle,x,y,deviation_from_map");
    CHECK(split_fields(rows[1])[0] == "0");
    CHECK(std::stod(split_fields(rows[1])[3]) == 0.0);

    CHECK(run_cli("simulate --a 0.1 --x0 2 --y0 3 --n 5 --kick-rule bogus").code == 2);

    const CliResult s1 = run_cli("simulate --a 0.1 --n 3 --seed 42");
    const CliResult s2 = run_cli("simulate --a 0.1 --n 3 --seed 42");
    REQUIRE(s1.code == 0);
    CHECK(s1.output == s2.output);
}

TEST_CASE("check-symmetry reports float-noise deviations") {
    const CliResult r = run_cli("check-symmetry --a 0.1 --samples 200 --compositions 10 --seed 7");
    REQUIRE(r.code == 0);
    const ordered_json report = ordered_json::parse(r.output);
    CHECK(report["a"].get<double>() == 0.1);
    CHECK(report["samples"] == 200);
    REQUIRE(report["results"].size() == 17);  // fixed transforms plus compositions
    CHECK(report["max_deviation"].get<double>() < 1e-12);
    for (const auto& row : report["results"])
        CHECK(row["max_deviation"].get<double>() < 1e-12);
}

TEST_CASE("config files feed subcommand options; flags still win") {
    const fs::path cfg = scratch_file("run.ini");
    {
        std::ofstream out(cfg);
        out << "[iterate]\n"
            << "a=0.05\n"
            << "x0=1.0\n"
            << "y0=1.0\n"
            << "n=2\n";
    }

    const CliResult from_cfg = run_cli("--config " + cfg.string() + " iterate");
    REQUIRE(from_cfg.code == 0);
    const auto cfg_rows = split_lines(from_cfg.output);
    REQUIRE(cfg_rows.size() == 4);
    CHECK(std::stod(split_fields(cfg_rows[2])[1]) ==
          doctest::Approx(1.1262206477211845).epsilon(1e-12));

    const CliResult with_flag = run_cli("--config " + cfg.string() + " iterate --a 0.1");
    REQUIRE(with_flag.code == 0);
    CHECK(std::stod(split_fields(split_lines(with_flag.output)[2])[1]) ==
          doctest::Approx(1.2524412954423690).epsilon(1e-12));
}
