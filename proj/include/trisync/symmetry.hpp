#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>

#include "trisync/geometry.hpp"
#include "trisync/params.hpp"

namespace trisync {

// Linear parts of the transforms commuting with the chain map. All four are
// signed permutation matrices (and involutions):
//   identity                  (x, y) -> ( x,  y)
//   rotation_pi               (x, y) -> (-x, -y)
//   diagonal_reflection       (x, y) -> ( y,  x)
//   antidiagonal_reflection   (x, y) -> (-y, -x)
enum class LinearPart { identity, rotation_pi, diagonal_reflection, antidiagonal_reflection };

std::string_view linear_part_name(LinearPart part);
std::optional<LinearPart> linear_part_from_name(std::string_view name);

// p -> L p + 2 pi (l, k). Composition and inversion stay in exact integer
// arithmetic; only operator() touches floating point.
class SymmetryTransform {
  public:
    SymmetryTransform() = default;
    SymmetryTransform(LinearPart linear, long l, long k) : linear_(linear), l_(l), k_(k) {}

    static SymmetryTransform identity() { return {}; }
    static SymmetryTransform translation(long l, long k) { return {LinearPart::identity, l, k}; }
    static SymmetryTransform rotation_pi() { return {LinearPart::rotation_pi, 0, 0}; }
    static SymmetryTransform diagonal_reflection() { return {LinearPart::diagonal_reflection, 0, 0}; }
    static SymmetryTransform antidiagonal_reflection() {
        return {LinearPart::antidiagonal_reflection, 0, 0};
    }

    PhasePoint operator()(PhasePoint p) const;

    // this after other: (*this) o other.
    SymmetryTransform compose(const SymmetryTransform& other) const;
    SymmetryTransform inverse() const;

    LinearPart linear() const { return linear_; }
    long l() const { return l_; }
    long k() const { return k_; }
    Mat2 linear_matrix() const;

    friend bool operator==(const SymmetryTransform&, const SymmetryTransform&) = default;

  private:
    LinearPart linear_ = LinearPart::identity;
    long l_ = 0, k_ = 0;
};

PhasePoint apply_transform(const SymmetryTransform& t, PhasePoint p);

// Max sup-norm deviation of F(t p) - t(F p) over seeded uniform samples in
// [-10, 10]^2. Exact equivariance means this is float noise, < 1e-12.
double check_equivariance(const SymmetryTransform& t, const CouplingParams& params,
                          int samples = 1000, unsigned long long seed = 0x5eedULL);

// Splits p = t(q) with q in [0, 2 pi)^2 and t a pure translation.
std::pair<PhasePoint, SymmetryTransform> wrap_to_fundamental(PhasePoint p);

enum class LineOrientation { positive_slope, negative_slope };

// y = x + 2 k pi (positive_slope, index k) or y = -x + 2 l pi (negative_slope,
// index l). Both families are invariant curves of the chain map.
struct InvariantLine {
    LineOrientation orientation;
    long index;

    double residual(PhasePoint p) const;  // signed distance numerator: y -x -2k pi resp. y +x -2l pi
};

// The line whose implicit form vanishes at p within tol, if any; when both
// families match (lattice intersection points) the smaller residual wins,
// ties fall to positive_slope.
std::optional<InvariantLine> on_invariant_line(PhasePoint p, double tol = 1e-9);

enum class RegionMembership { interior, boundary, outside };

// Invariant square cut out by consecutive lines of both families:
//   -x + 2(l-1) pi <= y <= -x + 2l pi,  x + 2(k-1) pi <= y <= x + 2k pi.
struct InvariantSquare {
    long l{}, k{};

    std::array<PhasePoint, 4> vertices() const;  // CCW from the bottom vertex
    PhasePoint centroid() const;
    // Signed inequality slacks, all >= 0 inside.
    std::array<double, 4> slacks(PhasePoint p) const;
    // Rotation by pi about the centroid; commutes with the chain map.
    SymmetryTransform centroid_rotation() const;
};

RegionMembership square_membership(PhasePoint p, const InvariantSquare& square, double tol = 1e-12);

// Centroid rotation of the square with (l, k) = (1, 0): (x, y) -> (2 pi - x, -y).
PhasePoint s10_internal_rotation(PhasePoint p);

}  // namespace trisync
