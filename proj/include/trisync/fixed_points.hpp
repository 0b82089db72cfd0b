#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "trisync/geometry.hpp"
#include "trisync/params.hpp"

namespace trisync {

// The fixed points of the chain map form four doubly periodic families,
// indexed (l, k) on the 2 pi lattice:
//   P0 (2l pi,      2k pi)       source
//   P1 (2l pi,      pi + 2k pi)  saddle
//   P2 (pi + 2l pi, 2k pi)       saddle
//   P3 (pi + 2l pi, pi + 2k pi)  sink
enum class FixedPointFamily { p0, p1, p2, p3 };

enum class StabilityClass { source, saddle, sink };

struct FixedPointInfo {
    PhasePoint location;
    FixedPointFamily family;
    long l, k;
    // Closed forms: P0 {1+a, 1+3a}, P1/P2 {1+a sqrt(3), 1-a sqrt(3)},
    // P3 {1-3a, 1-a}. Order is fixed per family.
    std::array<double, 2> eigenvalues;
    // From the Jacobian, scaled so the second component is 1 where possible,
    // unit norm otherwise; eigenvectors[i] belongs to eigenvalues[i].
    std::array<PhasePoint, 2> eigenvectors;
    StabilityClass stability;
};

FixedPointInfo fixed_point(FixedPointFamily family, long l, long k, const CouplingParams& params);

// All four families over the closed index ranges, family-major then l then k.
std::vector<FixedPointInfo> fixed_points(const CouplingParams& params,
                                         long lmin, long lmax, long kmin, long kmax);

std::string_view family_name(FixedPointFamily family);
std::string_view stability_name(StabilityClass stability);

}  // namespace trisync
