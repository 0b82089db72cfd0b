#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "trisync/geometry.hpp"

namespace trisync::io {

// Round-trippable decimal rendering (17 significant digits, '.' separator).
std::string format_double(double v);

using Rgb = std::array<std::uint8_t, 3>;

// Binary PPM (P6), pixels row-major starting at the top row.
void write_ppm(std::ostream& out, int width, int height, const std::vector<Rgb>& pixels);

// Minimal SVG 1.1 document over world coordinates; y points up in world
// space and is flipped for the viewport.
class SvgDocument {
  public:
    SvgDocument(const Window& world, int width_px, int height_px);

    void add_polyline(const std::vector<PhasePoint>& vertices, std::string_view stroke,
                      double stroke_width, bool close = false);
    void add_circle(PhasePoint center, double radius_px, std::string_view fill);

    std::string str() const;

  private:
    PhasePoint to_pixel(PhasePoint world) const;

    Window world_;
    int width_px_, height_px_;
    std::vector<std::string> elements_;
};

}  // namespace trisync::io
