#include "trisync/geometry.hpp"

namespace trisync {

std::optional<Mat2::RealEigen> Mat2::eigen_real() const {
    const double half_trace = 0.5 * trace();
    const double disc = half_trace * half_trace - det();
    if (disc < 0.0) return std::nullopt;

    const double root = std::sqrt(disc);
    RealEigen e;
    e.lambda1 = half_trace + root;
    e.lambda2 = half_trace - root;

    auto eigenvector = [this](double lambda) -> PhasePoint {
        // (M - lambda I) v = 0; take the better-conditioned row.
        const PhasePoint from_row0{a01, lambda - a00};
        const PhasePoint from_row1{lambda - a11, a10};
        PhasePoint v = norm(from_row0) >= norm(from_row1) ? from_row0 : from_row1;
        const double n = norm(v);
        if (n == 0.0) return {1.0, 0.0};  // scalar matrix: every direction works
        return (1.0 / n) * v;
    };
    e.v1 = eigenvector(e.lambda1);
    e.v2 = eigenvector(e.lambda2);
    return e;
}

}  // namespace trisync
