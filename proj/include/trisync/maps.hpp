#pragma once

#include "trisync/geometry.hpp"
#include "trisync/params.hpp"

namespace trisync {

// One-cycle return maps of three pulse-coupled clocks, reduced to the phase
// differences (x, y) of the two outer clocks against the middle one.
//
// Chain topology (outer-middle-outer):
//   x' = x + a (2 sin x + sin y)
//   y' = y + a (sin x + 2 sin y)
//
// Ring topology (all-to-all) adds the outer-outer interaction sin(x - y).

PhasePoint apply_line_map(PhasePoint p, const CouplingParams& params);

PhasePoint apply_triangle_map(PhasePoint p, const CouplingParams& params);

// (F - id)/a, the coupling-independent displacement field (2 sin x + sin y,
// sin x + 2 sin y). Its zero curves are the nullclines.
PhasePoint perturbation_field(PhasePoint p);

Mat2 jacobian(PhasePoint p, const CouplingParams& params);

double jacobian_determinant(PhasePoint p, const CouplingParams& params);

// Damped Newton solve of F(q) = p seeded at q = p; residual tolerance 1e-12
// in the sup norm, at most 50 iterations. Throws NonConvergence on failure,
// which for valid params indicates a bug rather than a property of the map.
PhasePoint apply_line_map_inverse(PhasePoint p, const CouplingParams& params);

}  // namespace trisync
