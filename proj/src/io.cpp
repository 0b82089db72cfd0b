#include "trisync/io.hpp"

#include <cstdio>

namespace trisync::io {

std::string format_double(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", v);
    return buffer;
}

void write_ppm(std::ostream& out, int width, int height, const std::vector<Rgb>& pixels) {
    out << "P6\n" << width << " " << height << "\n255\n";
    out.write(reinterpret_cast<const char*>(pixels.data()),
              std::streamsize(pixels.size() * sizeof(Rgb)));
}

SvgDocument::SvgDocument(const Window& world, int width_px, int height_px)
    : world_(world), width_px_(width_px), height_px_(height_px) {}

PhasePoint SvgDocument::to_pixel(PhasePoint world) const {
    return {(world.x - world_.xmin) / world_.width() * width_px_,
            (world_.ymax - world.y) / world_.height() * height_px_};
}

namespace {
std::string px(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.4f", v);
    return buffer;
}
}  // namespace

void SvgDocument::add_polyline(const std::vector<PhasePoint>& vertices, std::string_view stroke,
                               double stroke_width, bool close) {
    if (vertices.size() < 2) return;
    std::string d;
    d.reserve(vertices.size() * 20);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const PhasePoint p = to_pixel(vertices[i]);
        d += i == 0 ? "M" : " L";
        d += px(p.x);
        d += ",";
        d += px(p.y);
    }
    if (close) d += " Z";
    elements_.push_back("<path d=\"" + d + "\" fill=\"none\" stroke=\"" + std::string(stroke) +
                        "\" stroke-width=\"" + px(stroke_width) + "\"/>");
}

void SvgDocument::add_circle(PhasePoint center, double radius_px, std::string_view fill) {
    const PhasePoint c = to_pixel(center);
    elements_.push_back("<circle cx=\"" + px(c.x) + "\" cy=\"" + px(c.y) + "\" r=\"" +
                        px(radius_px) + "\" fill=\"" + std::string(fill) + "\"/>");
}

std::string SvgDocument::str() const {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width_px_) + "\" height=\"" + std::to_string(height_px_) +
           "\" viewBox=\"0 0 " + std::to_string(width_px_) + " " + std::to_string(height_px_) +
           "\">\n";
    for (const std::string& element : elements_) {
        out += "  ";
        out += element;
        out += "\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace trisync::io
