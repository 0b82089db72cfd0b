#include "trisync/fixed_points.hpp"

#include <cmath>

#include "trisync/maps.hpp"

namespace trisync {

namespace {

constexpr double sqrt3 = 1.7320508075688772;

PhasePoint family_location(FixedPointFamily family, long l, long k) {
    const double lx = two_pi * double(l), ky = two_pi * double(k);
    switch (family) {
        case FixedPointFamily::p0: return {lx, ky};
        case FixedPointFamily::p1: return {lx, pi + ky};
        case FixedPointFamily::p2: return {pi + lx, ky};
        case FixedPointFamily::p3: return {pi + lx, pi + ky};
    }
    return {};
}

std::array<double, 2> family_eigenvalues(FixedPointFamily family, double a) {
    switch (family) {
        case FixedPointFamily::p0: return {1.0 + a, 1.0 + 3.0 * a};
        case FixedPointFamily::p1:
        case FixedPointFamily::p2: return {1.0 + a * sqrt3, 1.0 - a * sqrt3};
        case FixedPointFamily::p3: return {1.0 - 3.0 * a, 1.0 - a};
    }
    return {};
}

StabilityClass family_stability(const std::array<double, 2>& eig) {
    const double m0 = std::abs(eig[0]), m1 = std::abs(eig[1]);
    if (m0 > 1.0 && m1 > 1.0) return StabilityClass::source;
    if (m0 < 1.0 && m1 < 1.0) return StabilityClass::sink;
    return StabilityClass::saddle;
}

// Second component pinned to 1 where possible, unit norm with positive first
// component otherwise.
PhasePoint normalized_eigenvector(PhasePoint v) {
    if (std::abs(v.y) > 1e-12 * norm(v)) return {v.x / v.y, 1.0};
    return v.x < 0.0 ? PhasePoint{-v.x, -v.y} : v;
}

}  // namespace

FixedPointInfo fixed_point(FixedPointFamily family, long l, long k, const CouplingParams& params) {
    FixedPointInfo info;
    info.family = family;
    info.l = l;
    info.k = k;
    info.location = family_location(family, l, k);
    info.eigenvalues = family_eigenvalues(family, params.a());
    info.stability = family_stability(info.eigenvalues);

    // Eigenvectors come from the Jacobian so they track the actual tangent
    // map; eigenvalues keep the closed forms above. The two agree to float
    // precision, which the test suite pins down.
    const auto eigen = jacobian(info.location, params).eigen_real();
    if (eigen) {
        const bool aligned = std::abs(eigen->lambda1 - info.eigenvalues[0]) <=
                             std::abs(eigen->lambda1 - info.eigenvalues[1]);
        info.eigenvectors[0] = normalized_eigenvector(aligned ? eigen->v1 : eigen->v2);
        info.eigenvectors[1] = normalized_eigenvector(aligned ? eigen->v2 : eigen->v1);
    }
    return info;
}

std::vector<FixedPointInfo> fixed_points(const CouplingParams& params,
                                         long lmin, long lmax, long kmin, long kmax) {
    std::vector<FixedPointInfo> result;
    if (lmin > lmax || kmin > kmax) return result;
    result.reserve(4 * std::size_t(lmax - lmin + 1) * std::size_t(kmax - kmin + 1));
    for (FixedPointFamily family : {FixedPointFamily::p0, FixedPointFamily::p1,
                                    FixedPointFamily::p2, FixedPointFamily::p3})
        for (long l = lmin; l <= lmax; ++l)
            for (long k = kmin; k <= kmax; ++k)
                result.push_back(fixed_point(family, l, k, params));
    return result;
}

std::string_view family_name(FixedPointFamily family) {
    switch (family) {
        case FixedPointFamily::p0: return "P0";
        case FixedPointFamily::p1: return "P1";
        case FixedPointFamily::p2: return "P2";
        case FixedPointFamily::p3: return "P3";
    }
    return "?";
}

std::string_view stability_name(StabilityClass stability) {
    switch (stability) {
        case StabilityClass::source: return "source";
        case StabilityClass::saddle: return "saddle";
        case StabilityClass::sink: return "sink";
    }
    return "?";
}

}  // namespace trisync
