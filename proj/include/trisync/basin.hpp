#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trisync/geometry.hpp"
#include "trisync/params.hpp"

namespace trisync {

// Sink reached by an orbit: the phase-opposition configuration
// (pi + 2 l pi, pi + 2 k pi).
struct AttractorHit {
    long l{}, k{};
    std::uint32_t iterations{};

    PhasePoint attractor() const { return {pi + two_pi * double(l), pi + two_pi * double(k)}; }
};

struct ConvergenceOutcome {
    std::optional<AttractorHit> hit;   // nullopt: undecided after n_max steps
    std::uint32_t iterations{};        // steps actually taken
};

// Iterates the chain map until the orbit is within eps (torus distance) of
// the phase-opposition configuration. Internally the orbit is kept wrapped to
// [0, 2pi)^2 with the translation index tracked exactly, so results are
// bit-identical under 2 pi shifts of the start point.
ConvergenceOutcome iterate_to_attractor(PhasePoint p, const CouplingParams& params,
                                        double eps = 1e-6, std::uint32_t n_max = 100000);

// Empirical one-step contraction ratio |F^{n+1}(p) - p*| / |F^n(p) - p*|
// toward the sink p* of the orbit. Approaches 1 - a for generic points and
// 1 - 3a on the diagonal family. Throws NotConverging when the n-th iterate
// is not near a sink or the distance has collapsed to float noise.
double convergence_rate(PhasePoint p, const CouplingParams& params, int n);

struct BasinRaster {
    struct Cell {
        std::int32_t label{-1};    // 0: phase-opposition family; -1: undecided
        std::int32_t l{}, k{};     // translation index of the attractor (label 0 only)
        std::uint32_t iterations{};
    };

    Window window;
    int nx{}, ny{};
    std::vector<Cell> cells;                // row-major, index j * nx + i
    std::vector<PhasePoint> catalog;        // attractor representatives mod 2 pi

    const Cell& at(int i, int j) const { return cells[std::size_t(j) * nx + i]; }
    PhasePoint center(int i, int j) const {
        return {window.xmin + (i + 0.5) * window.width() / nx,
                window.ymin + (j + 0.5) * window.height() / ny};
    }
};

// Labels every cell center with iterate_to_attractor. Orbit starts come from
// the wrapped window origin plus the exact local offset, so windows shifted
// by whole periods yield identical labels and iteration counts (with l, k
// offset accordingly). Cells are independent, so evaluation is spread over
// threads (0 = hardware concurrency) with bit-identical output either way.
BasinRaster rasterize_basin(const Window& window, int nx, int ny, const CouplingParams& params,
                            double eps = 1e-6, std::uint32_t n_max = 100000, unsigned threads = 0);

}  // namespace trisync
