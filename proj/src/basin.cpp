#include "trisync/basin.hpp"

#include <cmath>
#include <thread>

#include "trisync/errors.hpp"
#include "trisync/maps.hpp"
#include "trisync/symmetry.hpp"

namespace trisync {

namespace {

// One wrapped map step: the orbit lives in [0, 2pi)^2 and the translation
// index is book-kept exactly. Keeping the floating-point state wrapped makes
// every orbit bit-identical under 2 pi shifts of its start point.
void wrapped_step(PhasePoint& q, long& l, long& k, const CouplingParams& params) {
    q = apply_line_map(q, params);
    // per-step displacement is under 3a < 1/2, so one shift suffices
    if (q.x >= two_pi) {
        q.x -= two_pi;
        ++l;
    } else if (q.x < 0.0) {
        q.x += two_pi;
        --l;
    }
    if (q.y >= two_pi) {
        q.y -= two_pi;
        ++k;
    } else if (q.y < 0.0) {
        q.y += two_pi;
        --k;
    }
}

}  // namespace

ConvergenceOutcome iterate_to_attractor(PhasePoint p, const CouplingParams& params, double eps,
                                        std::uint32_t n_max) {
    if (!(eps > 0.0)) throw std::invalid_argument("iterate_to_attractor: eps must be positive");

    auto [q, t] = wrap_to_fundamental(p);
    long l = t.l(), k = t.k();
    const PhasePoint target{pi, pi};

    for (std::uint32_t n = 0;; ++n) {
        // q is wrapped, so the plain distance to (pi, pi) is already the
        // torus distance to the phase-opposition family
        if (distance(q, target) < eps) return {AttractorHit{l, k, n}, n};
        if (n == n_max) return {std::nullopt, n_max};
        wrapped_step(q, l, k, params);
    }
}

double convergence_rate(PhasePoint p, const CouplingParams& params, int n) {
    if (n < 0) throw std::invalid_argument("convergence_rate: n must be non-negative");

    auto [q, t] = wrap_to_fundamental(p);
    long l = t.l(), k = t.k();
    const PhasePoint target{pi, pi};

    for (int i = 0; i < n; ++i) wrapped_step(q, l, k, params);

    const double before = distance(q, target);
    if (before > 0.5)
        throw NotConverging("convergence_rate: orbit is not near the sink after n steps");
    if (before < 1e-13)
        throw NotConverging("convergence_rate: orbit has collapsed onto the sink; "
                            "the one-step ratio would be float noise");

    wrapped_step(q, l, k, params);
    return distance(q, target) / before;
}

BasinRaster rasterize_basin(const Window& window, int nx, int ny, const CouplingParams& params,
                            double eps, std::uint32_t n_max, unsigned threads) {
    if (window.degenerate()) throw EmptyWindow("rasterize_basin: window is empty or degenerate");
    if (nx < 1 || ny < 1)
        throw std::invalid_argument("rasterize_basin: raster must have at least one cell");

    BasinRaster raster;
    raster.window = window;
    raster.nx = nx;
    raster.ny = ny;
    raster.cells.resize(std::size_t(nx) * ny);
    raster.catalog = {PhasePoint{pi, pi}};

    // Orbit starts are assembled from the wrapped window origin plus the
    // exact local cell offset. Adding the offset to the absolute corner
    // instead would round differently in a window shifted by full periods
    // and break the bit-identical-labels guarantee.
    const auto wrapped_origin = wrap_to_fundamental({window.xmin, window.ymin});
    const PhasePoint origin = wrapped_origin.first;
    const long l0 = wrapped_origin.second.l(), k0 = wrapped_origin.second.k();

    auto fill_rows = [&](int j_begin, int j_end) {
        for (int j = j_begin; j < j_end; ++j) {
            for (int i = 0; i < nx; ++i) {
                const PhasePoint start{origin.x + (i + 0.5) * window.width() / nx,
                                       origin.y + (j + 0.5) * window.height() / ny};
                const ConvergenceOutcome outcome =
                    iterate_to_attractor(start, params, eps, n_max);
                BasinRaster::Cell& cell = raster.cells[std::size_t(j) * nx + i];
                cell.iterations = outcome.iterations;
                if (outcome.hit) {
                    cell.label = 0;
                    cell.l = std::int32_t(outcome.hit->l + l0);
                    cell.k = std::int32_t(outcome.hit->k + k0);
                }
            }
        }
    };

    unsigned worker_count = threads == 0 ? std::thread::hardware_concurrency() : threads;
    worker_count = std::max(1u, std::min<unsigned>(worker_count, unsigned(ny)));

    if (worker_count == 1) {
        fill_rows(0, ny);
        return raster;
    }

    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    const int rows_per_worker = (ny + int(worker_count) - 1) / int(worker_count);
    for (unsigned w = 0; w < worker_count; ++w) {
        const int j_begin = int(w) * rows_per_worker;
        const int j_end = std::min(ny, j_begin + rows_per_worker);
        if (j_begin >= j_end) break;
        workers.emplace_back(fill_rows, j_begin, j_end);
    }
    for (std::thread& worker : workers) worker.join();
    return raster;
}

}  // namespace trisync
