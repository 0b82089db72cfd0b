#include "trisync/nullclines.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "trisync/errors.hpp"
#include "trisync/maps.hpp"

namespace trisync {

namespace {

constexpr double vertex_tolerance = 1e-6;

using FieldFn = double (*)(PhasePoint);

double field_vertical(PhasePoint p) { return 2.0 * std::sin(p.x) + std::sin(p.y); }
double field_horizontal(PhasePoint p) { return std::sin(p.x) + 2.0 * std::sin(p.y); }

// Grid edges carry the extracted vertices; key = node index * 2 + orientation
// (0: towards +x, 1: towards +y).
std::uint64_t edge_key(int i, int j, int orientation, int nodes_per_row) {
    return (std::uint64_t(j) * nodes_per_row + std::uint64_t(i)) * 2 + orientation;
}

// Bisection along a grid edge with a sign change; ends when the field
// magnitude drops under vertex_tolerance (a handful of steps, since the
// field's Lipschitz constant is 3).
PhasePoint refine_crossing(PhasePoint p_neg, PhasePoint p_pos, FieldFn field) {
    PhasePoint mid = {0.5 * (p_neg.x + p_pos.x), 0.5 * (p_neg.y + p_pos.y)};
    for (int it = 0; it < 80; ++it) {
        const double fm = field(mid);
        if (std::abs(fm) < vertex_tolerance) break;
        (fm < 0.0 ? p_neg : p_pos) = mid;
        mid = {0.5 * (p_neg.x + p_pos.x), 0.5 * (p_neg.y + p_pos.y)};
    }
    return mid;
}

std::vector<Curve2D> extract_field(const Window& window, int resolution, FieldFn field,
                                   CurveTag tag) {
    const int nodes = resolution + 1;
    const double dx = window.width() / resolution;
    const double dy = window.height() / resolution;

    auto node_point = [&](int i, int j) {
        return PhasePoint{window.xmin + i * dx, window.ymin + j * dy};
    };

    std::vector<double> values(std::size_t(nodes) * nodes);
    for (int j = 0; j < nodes; ++j)
        for (int i = 0; i < nodes; ++i)
            values[std::size_t(j) * nodes + i] = field(node_point(i, j));

    auto inside = [&](int i, int j) { return values[std::size_t(j) * nodes + i] >= 0.0; };
    auto value = [&](int i, int j) { return values[std::size_t(j) * nodes + i]; };

    std::unordered_map<std::uint64_t, PhasePoint> vertex_of_edge;
    auto crossing = [&](int i0, int j0, int i1, int j1, int orientation) {
        const std::uint64_t key = edge_key(i0, j0, orientation, nodes);
        if (!vertex_of_edge.count(key)) {
            PhasePoint a = node_point(i0, j0), b = node_point(i1, j1);
            if (value(i0, j0) < 0.0)
                vertex_of_edge.emplace(key, refine_crossing(a, b, field));
            else
                vertex_of_edge.emplace(key, refine_crossing(b, a, field));
        }
        return key;
    };

    std::vector<std::pair<std::uint64_t, std::uint64_t>> segments;
    for (int j = 0; j < resolution; ++j) {
        for (int i = 0; i < resolution; ++i) {
            const bool b0 = inside(i, j), b1 = inside(i + 1, j);
            const bool b2 = inside(i + 1, j + 1), b3 = inside(i, j + 1);
            const int config = int(b0) | int(b1) << 1 | int(b2) << 2 | int(b3) << 3;
            if (config == 0 || config == 15) continue;

            auto bottom = [&] { return crossing(i, j, i + 1, j, 0); };
            auto top = [&] { return crossing(i, j + 1, i + 1, j + 1, 0); };
            auto left = [&] { return crossing(i, j, i, j + 1, 1); };
            auto right = [&] { return crossing(i + 1, j, i + 1, j + 1, 1); };
            auto emit = [&](std::uint64_t a, std::uint64_t b) { segments.emplace_back(a, b); };

            switch (config) {
                case 1: case 14: emit(bottom(), left()); break;
                case 2: case 13: emit(bottom(), right()); break;
                case 4: case 11: emit(right(), top()); break;
                case 8: case 7: emit(top(), left()); break;
                case 3: case 12: emit(left(), right()); break;
                case 6: case 9: emit(bottom(), top()); break;
                case 5: {  // opposite corners; the center sign picks the pairing
                    const bool center = field({window.xmin + (i + 0.5) * dx,
                                               window.ymin + (j + 0.5) * dy}) >= 0.0;
                    if (center) { emit(bottom(), right()); emit(top(), left()); }
                    else { emit(bottom(), left()); emit(right(), top()); }
                    break;
                }
                case 10: {
                    const bool center = field({window.xmin + (i + 0.5) * dx,
                                               window.ymin + (j + 0.5) * dy}) >= 0.0;
                    if (center) { emit(bottom(), left()); emit(right(), top()); }
                    else { emit(bottom(), right()); emit(top(), left()); }
                    break;
                }
                default: break;
            }
        }
    }

    // Chain segments into polylines through their shared grid edges. Open
    // paths first (degree-1 edges), remaining cycles afterwards; everything
    // scans in fixed order to keep the output deterministic.
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> incident;
    for (std::uint32_t s = 0; s < segments.size(); ++s) {
        incident[segments[s].first].push_back(s);
        incident[segments[s].second].push_back(s);
    }

    std::vector<bool> used(segments.size(), false);
    std::vector<Curve2D> curves;

    auto walk = [&](std::uint64_t start_edge, std::uint32_t first_segment) {
        Curve2D curve{tag, {}};
        curve.vertices.push_back(vertex_of_edge.at(start_edge));
        std::uint64_t edge = start_edge;
        std::uint32_t seg = first_segment;
        while (true) {
            used[seg] = true;
            edge = segments[seg].first == edge ? segments[seg].second : segments[seg].first;
            const PhasePoint v = vertex_of_edge.at(edge);
            if (!(v == curve.vertices.back())) curve.vertices.push_back(v);
            std::uint32_t next = UINT32_MAX;
            for (std::uint32_t cand : incident.at(edge))
                if (!used[cand]) { next = cand; break; }
            if (next == UINT32_MAX) break;
            seg = next;
        }
        if (curve.vertices.size() >= 2) curves.push_back(std::move(curve));
    };

    std::vector<std::uint64_t> path_starts;
    for (const auto& [edge, segs] : incident)
        if (segs.size() == 1) path_starts.push_back(edge);
    std::sort(path_starts.begin(), path_starts.end());

    for (std::uint64_t edge : path_starts) {
        const std::uint32_t seg = incident.at(edge).front();
        if (!used[seg]) walk(edge, seg);
    }
    for (std::uint32_t s = 0; s < segments.size(); ++s)  // leftover closed loops
        if (!used[s]) walk(segments[s].first, s);

    return curves;
}

}  // namespace

std::vector<Curve2D> nullclines(const Window& window, int resolution) {
    if (window.degenerate()) throw EmptyWindow("nullclines: window is empty or degenerate");
    if (resolution < 16) throw std::invalid_argument("nullclines: resolution must be at least 16");

    std::vector<Curve2D> curves =
        extract_field(window, resolution, field_vertical, CurveTag::nullcline_vertical);
    std::vector<Curve2D> horizontal =
        extract_field(window, resolution, field_horizontal, CurveTag::nullcline_horizontal);
    curves.insert(curves.end(), std::make_move_iterator(horizontal.begin()),
                  std::make_move_iterator(horizontal.end()));
    return curves;
}

}  // namespace trisync
