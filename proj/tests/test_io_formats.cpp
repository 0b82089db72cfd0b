#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "trisync/geometry.hpp"
#include "trisync/io.hpp"

using namespace trisync;

TEST_CASE("format_double round-trips bitwise through strtod") {
    for (double v : {0.1, pi, two_pi, 1e-300, -0.0, 1.0, -2.5, 1.0 / 3.0}) {
        const std::string s = io::format_double(v);
        const double back = std::strtod(s.c_str(), nullptr);
        CHECK(std::bit_cast<std::uint64_t>(back) == std::bit_cast<std::uint64_t>(v));
    }
    CHECK(io::format_double(1.0) == "1");
    CHECK(io::format_double(-2.5) == "-2.5");
    // locale-independent '.' separator
    CHECK(io::format_double(0.1).find('.') == 1);
    CHECK(io::format_double(0.1).find(',') == std::string::npos);
}

TEST_CASE("ppm writer emits the exact binary layout") {
    std::ostringstream out(std::ios::binary);
    const std::vector<io::Rgb> pixels = {
        {255, 0, 0}, {0, 255, 0},   // top row
        {0, 0, 255}, {7, 8, 9},     // bottom row
    };
    io::write_ppm(out, 2, 2, pixels);
    const std::string bytes = out.str();
    const std::string header = "P6\n2 2\n255\n";
    REQUIRE(bytes.size() == header.size() + 12);
    CHECK(bytes.substr(0, header.size()) == header);
    const unsigned char* body = reinterpret_cast<const unsigned char*>(bytes.data() + header.size());
    CHECK(body[0] == 255);
    CHECK(body[1] == 0);
    CHECK(body[4] == 255);
    CHECK(body[9] == 7);
    CHECK(body[11] == 9);
}

TEST_CASE("svg documents flip y and carry the expected structure") {
    io::SvgDocument doc({0.0, 1.0, 0.0, 1.0}, 100, 100);
    doc.add_polyline({{0.0, 0.0}, {1.0, 1.0}}, "black", 1.5);
    doc.add_circle({0.5, 0.5}, 3.0, "red");
    const std::string svg = doc.str();

    CHECK(svg.find("<?xml version=\"1.0\" encoding=\"UTF-8\"?>") == 0);
    CHECK(svg.find("xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(svg.find("viewBox=\"0 0 100 100\"") != std::string::npos);
    // world y up, pixel y down: (0,0) lands at the bottom-left pixel corner
    CHECK(svg.find("M0.0000,100.0000 L100.0000,0.0000") != std::string::npos);
    CHECK(svg.find("stroke=\"black\"") != std::string::npos);
    CHECK(svg.find("stroke-width=\"1.5000\"") != std::string::npos);
    CHECK(svg.find("cx=\"50.0000\" cy=\"50.0000\" r=\"3.0000\" fill=\"red\"") != std::string::npos);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
}

TEST_CASE("degenerate polylines are dropped; closed ones get a Z") {
    io::SvgDocument doc({0.0, 2.0, 0.0, 2.0}, 50, 50);
    doc.add_polyline({{1.0, 1.0}}, "blue", 1.0);
    CHECK(doc.str().find("<path") == std::string::npos);

    doc.add_polyline({{0.0, 0.0}, {2.0, 0.0}, {2.0, 2.0}}, "blue", 1.0, true);
    const std::string svg = doc.str();
    CHECK(svg.find(" Z\"") != std::string::npos);
    CHECK(svg.find("M0.0000,50.0000 L50.0000,50.0000 L50.0000,0.0000 Z") != std::string::npos);
}
