#pragma once

#include "trisync/fixed_points.hpp"
#include "trisync/geometry.hpp"
#include "trisync/params.hpp"

namespace trisync {

enum class ManifoldDirection { stable, unstable };
enum class BranchSide { positive, negative };  // sign applied to the eigenvector

struct ManifoldBranch {
    FixedPointInfo saddle;
    ManifoldDirection direction;
    BranchSide side;
    double seed_offset;  // distance of the first vertex from the saddle
    double arc_step;     // upper bound on vertex spacing away from the endpoints
    Curve2D polyline;    // ordered from the saddle outward
};

// One-dimensional manifold growth by fundamental-domain iteration: seed a
// short segment along the eigenvector, push it with the map (stable branches
// use the inverse map), and insert midpoints in preimage space whenever the
// image spacing exceeds arc_step. Growth ends at max_arclength or when the
// head advances less than 1e-9 per sweep, i.e. the branch has landed on a
// fixed point. Throws NotASaddle for non-saddle input and StepCollapse when
// refinement cannot meet the spacing bound (seed_offset too large).
ManifoldBranch grow_manifold(const FixedPointInfo& saddle, ManifoldDirection direction,
                             BranchSide side, const CouplingParams& params,
                             double seed_offset = 1e-4, double max_arclength = 20.0,
                             double arc_step = 1e-3);

// Stable-manifold graph of the saddle (pi, 0) spanning its invariant square:
// eta runs from (0,0) through (pi,0) to (2pi,0) and is validated to be a
// strictly x-monotone polyline (GraphValidationFailed otherwise). The right
// half is the centroid-rotation image of the grown left half.
struct SeparatrixCurve {
    PhasePoint saddle;   // (pi, 0)
    Curve2D left_branch;   // ascending x, from near (0,0) to near (pi,0)
    Curve2D right_branch;  // descending x, from near (2pi,0) to near (pi,0)
    Curve2D eta;           // joined graph over x on [0, 2pi], saddle included

    double height_at(double x) const;  // linear interpolation of eta
};

SeparatrixCurve build_separatrix(const CouplingParams& params, double seed_offset = 1e-4,
                                 double arc_step = 1e-3);

enum class SeparatrixRegion { s10_plus, s10_minus, on_separatrix, outside_s10 };

// Side of eta within the (1,0) invariant square; tol bounds the on-curve band.
SeparatrixRegion classify_region(PhasePoint p, const SeparatrixCurve& separatrix,
                                 double tol = 1e-9);

// Symmetric Hausdorff distance between polylines (vertices against segments).
double polyline_hausdorff(const Curve2D& a, const Curve2D& b);

}  // namespace trisync
