#include "trisync/maps.hpp"

#include <cmath>

#include "trisync/errors.hpp"

namespace trisync {

PhasePoint apply_line_map(PhasePoint p, const CouplingParams& params) {
    const double a = params.a();
    const double sx = std::sin(p.x), sy = std::sin(p.y);
    return {p.x + a * (2.0 * sx + sy), p.y + a * (sx + 2.0 * sy)};
}

PhasePoint apply_triangle_map(PhasePoint p, const CouplingParams& params) {
    const double a = params.a();
    const double sx = std::sin(p.x), sy = std::sin(p.y);
    const double sxy = std::sin(p.x - p.y);
    return {p.x + a * (2.0 * sx + sy + sxy), p.y + a * (sx + 2.0 * sy - sxy)};
}

PhasePoint perturbation_field(PhasePoint p) {
    const double sx = std::sin(p.x), sy = std::sin(p.y);
    return {2.0 * sx + sy, sx + 2.0 * sy};
}

Mat2 jacobian(PhasePoint p, const CouplingParams& params) {
    const double a = params.a();
    const double cx = std::cos(p.x), cy = std::cos(p.y);
    return {1.0 + 2.0 * a * cx, a * cy,
            a * cx, 1.0 + 2.0 * a * cy};
}

double jacobian_determinant(PhasePoint p, const CouplingParams& params) {
    return jacobian(p, params).det();
}

PhasePoint apply_line_map_inverse(PhasePoint p, const CouplingParams& params) {
    constexpr double tol = 1e-12;
    constexpr int max_iterations = 50;
    constexpr int max_halvings = 30;

    PhasePoint q = p;
    PhasePoint residual = apply_line_map(q, params) - p;

    for (int it = 0; it < max_iterations; ++it) {
        if (sup_norm(residual) < tol) return q;

        const PhasePoint step = jacobian(q, params).solve(residual);

        // Backtrack on the residual norm; the full step is accepted in all
        // but pathological cases since F is a small perturbation of identity.
        double damping = 1.0;
        for (int h = 0; h <= max_halvings; ++h) {
            const PhasePoint candidate = q - damping * step;
            const PhasePoint candidate_residual = apply_line_map(candidate, params) - p;
            if (sup_norm(candidate_residual) < sup_norm(residual) || sup_norm(residual) < tol) {
                q = candidate;
                residual = candidate_residual;
                break;
            }
            damping *= 0.5;
            if (h == max_halvings)
                throw NonConvergence("inverse map: line search stalled");
        }
    }
    if (sup_norm(residual) < tol) return q;
    throw NonConvergence("inverse map: Newton did not reach tolerance in 50 iterations");
}

}  // namespace trisync
