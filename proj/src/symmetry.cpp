#include "trisync/symmetry.hpp"

#include <cmath>
#include <random>

#include "trisync/maps.hpp"

namespace trisync {

namespace {

// Internal coding of the four linear parts: matrix = sign * (swap ? P : I)
// with P the coordinate swap. Closed under products: signs multiply, swaps
// add mod 2.
struct Coded {
    bool swap;
    int sign;
};

Coded code(LinearPart part) {
    switch (part) {
        case LinearPart::identity: return {false, +1};
        case LinearPart::rotation_pi: return {false, -1};
        case LinearPart::diagonal_reflection: return {true, +1};
        case LinearPart::antidiagonal_reflection: return {true, -1};
    }
    return {false, +1};
}

LinearPart decode(Coded c) {
    if (!c.swap) return c.sign > 0 ? LinearPart::identity : LinearPart::rotation_pi;
    return c.sign > 0 ? LinearPart::diagonal_reflection : LinearPart::antidiagonal_reflection;
}

}  // namespace

std::string_view linear_part_name(LinearPart part) {
    switch (part) {
        case LinearPart::identity: return "identity";
        case LinearPart::rotation_pi: return "rotation_pi";
        case LinearPart::diagonal_reflection: return "diagonal_reflection";
        case LinearPart::antidiagonal_reflection: return "antidiagonal_reflection";
    }
    return "?";
}

std::optional<LinearPart> linear_part_from_name(std::string_view name) {
    for (LinearPart part : {LinearPart::identity, LinearPart::rotation_pi,
                            LinearPart::diagonal_reflection, LinearPart::antidiagonal_reflection})
        if (name == linear_part_name(part)) return part;
    return std::nullopt;
}

PhasePoint SymmetryTransform::operator()(PhasePoint p) const {
    const Coded c = code(linear_);
    PhasePoint q = c.swap ? PhasePoint{p.y, p.x} : p;
    if (c.sign < 0) q = -q;
    return {q.x + two_pi * double(l_), q.y + two_pi * double(k_)};
}

SymmetryTransform SymmetryTransform::compose(const SymmetryTransform& other) const {
    const Coded c1 = code(linear_), c2 = code(other.linear_);
    const Coded c{c1.swap != c2.swap, c1.sign * c2.sign};
    // translation: L1 tau2 + tau1, exact in integers
    long tl = other.l_, tk = other.k_;
    if (c1.swap) std::swap(tl, tk);
    if (c1.sign < 0) {
        tl = -tl;
        tk = -tk;
    }
    return {decode(c), tl + l_, tk + k_};
}

SymmetryTransform SymmetryTransform::inverse() const {
    // All four linear parts are involutions, so L^{-1} = L and the inverse
    // translation is -L tau.
    const Coded c = code(linear_);
    long tl = l_, tk = k_;
    if (c.swap) std::swap(tl, tk);
    if (c.sign < 0) {
        tl = -tl;
        tk = -tk;
    }
    return {linear_, -tl, -tk};
}

Mat2 SymmetryTransform::linear_matrix() const {
    const Coded c = code(linear_);
    const double s = double(c.sign);
    if (c.swap) return {0.0, s, s, 0.0};
    return {s, 0.0, 0.0, s};
}

PhasePoint apply_transform(const SymmetryTransform& t, PhasePoint p) { return t(p); }

double check_equivariance(const SymmetryTransform& t, const CouplingParams& params, int samples,
                          unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const PhasePoint p{coord(rng), coord(rng)};
        const PhasePoint lhs = apply_line_map(t(p), params);
        const PhasePoint rhs = t(apply_line_map(p, params));
        worst = std::max(worst, sup_norm(lhs - rhs));
    }
    return worst;
}

std::pair<PhasePoint, SymmetryTransform> wrap_to_fundamental(PhasePoint p) {
    auto split = [](double v) {
        long n = (long)std::floor(v / two_pi);
        double r = v - two_pi * double(n);
        // floor in floating point can land one period off at the seams
        if (r < 0.0) {
            r += two_pi;
            --n;
        } else if (r >= two_pi) {
            r -= two_pi;
            ++n;
        }
        return std::pair<double, long>{r, n};
    };
    const auto [qx, l] = split(p.x);
    const auto [qy, k] = split(p.y);
    return {PhasePoint{qx, qy}, SymmetryTransform::translation(l, k)};
}

double InvariantLine::residual(PhasePoint p) const {
    const double offset = two_pi * double(index);
    return orientation == LineOrientation::positive_slope ? p.y - p.x - offset
                                                          : p.y + p.x - offset;
}

std::optional<InvariantLine> on_invariant_line(PhasePoint p, double tol) {
    const InvariantLine plus{LineOrientation::positive_slope,
                             (long)std::llround((p.y - p.x) / two_pi)};
    const InvariantLine minus{LineOrientation::negative_slope,
                              (long)std::llround((p.y + p.x) / two_pi)};
    const double rp = std::abs(plus.residual(p));
    const double rm = std::abs(minus.residual(p));
    if (rp <= tol && rp <= rm) return plus;
    if (rm <= tol) return minus;
    return std::nullopt;
}

std::array<PhasePoint, 4> InvariantSquare::vertices() const {
    // Intersections of the bounding lines, CCW starting from the bottom
    // vertex (on both k-1 and l-1 lines).
    const double lm = double(l - 1), km = double(k - 1);
    auto cross = [](double L, double K) {  // y=-x+2L pi with y=x+2K pi
        return PhasePoint{pi * (L - K), pi * (L + K)};
    };
    return {cross(lm, km), cross(double(l), km), cross(double(l), double(k)),
            cross(lm, double(k))};
}

PhasePoint InvariantSquare::centroid() const {
    return {pi * double(l - k), pi * double(l + k - 1)};
}

std::array<double, 4> InvariantSquare::slacks(PhasePoint p) const {
    return {
        p.y - (-p.x + two_pi * double(l - 1)),  // above the lower negative-slope line
        (-p.x + two_pi * double(l)) - p.y,      // below the upper one
        p.y - (p.x + two_pi * double(k - 1)),   // above the lower positive-slope line
        (p.x + two_pi * double(k)) - p.y,       // below the upper one
    };
}

SymmetryTransform InvariantSquare::centroid_rotation() const {
    // p -> 2c - p with 2c = 2 pi (l-k, l+k-1): a lattice translation after
    // rotation_pi, hence exact.
    return {LinearPart::rotation_pi, l - k, l + k - 1};
}

RegionMembership square_membership(PhasePoint p, const InvariantSquare& square, double tol) {
    bool on_edge = false;
    for (double s : square.slacks(p)) {
        if (s < -tol) return RegionMembership::outside;
        if (s <= tol) on_edge = true;
    }
    return on_edge ? RegionMembership::boundary : RegionMembership::interior;
}

PhasePoint s10_internal_rotation(PhasePoint p) { return {two_pi - p.x, -p.y}; }

}  // namespace trisync
