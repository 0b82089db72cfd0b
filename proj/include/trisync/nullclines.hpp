#pragma once

#include <vector>

#include "trisync/geometry.hpp"
#include "trisync/params.hpp"

namespace trisync {

// Extracts both nullcline families of the perturbation field inside the
// window as chained polylines: the zero set of 2 sin x + sin y (tagged
// nullcline_vertical) and of sin x + 2 sin y (nullcline_horizontal).
//
// Marching squares on a (resolution x resolution)-cell grid, followed by a
// bisection refinement pass that pushes every vertex to |field| < 1e-6 along
// its grid edge. resolution must be >= 16; throws EmptyWindow on a degenerate
// window. The curves do not depend on the coupling gain.
std::vector<Curve2D> nullclines(const Window& window, int resolution = 512);

}  // namespace trisync
