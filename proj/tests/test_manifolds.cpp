#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "trisync/errors.hpp"
#include "trisync/manifolds.hpp"
#include "trisync/maps.hpp"
#include "trisync/symmetry.hpp"

using namespace trisync;

namespace {

// Quarter diamonds of the (1, 0) invariant square, named going
// counterclockwise from the one touching the origin: left, top, bottom.
std::array<double, 4> left_quarter_slacks(PhasePoint p) {
    return {p.y - (p.x - pi), p.x - p.y, p.y + p.x, (pi - p.x) - p.y};
}
std::array<double, 4> top_quarter_slacks(PhasePoint p) {
    return {(p.x + p.y) - pi, two_pi - p.x - p.y, p.y - (p.x - pi), p.x - p.y};
}
std::array<double, 4> bottom_quarter_slacks(PhasePoint p) {
    return {(p.x - pi) - p.y, p.y - (p.x - two_pi), p.x + p.y, (pi - p.x) - p.y};
}

bool inside(const std::array<double, 4>& slacks, double tol) {
    for (double s : slacks)
        if (s < -tol) return false;
    return true;
}

}  // namespace

TEST_CASE("growth rejects non-saddles and bad knobs") {
    const CouplingParams params(0.1);
    const auto source = fixed_point(FixedPointFamily::p0, 0, 0, params);
    const auto sink = fixed_point(FixedPointFamily::p3, 0, 0, params);
    const auto saddle = fixed_point(FixedPointFamily::p2, 0, 0, params);
    CHECK_THROWS_AS(grow_manifold(source, ManifoldDirection::unstable, BranchSide::positive, params),
                    NotASaddle);
    CHECK_THROWS_AS(grow_manifold(sink, ManifoldDirection::stable, BranchSide::negative, params),
                    NotASaddle);
    CHECK_THROWS_AS(grow_manifold(saddle, ManifoldDirection::stable, BranchSide::negative, params,
                                  -1e-4),
                    std::invalid_argument);
    CHECK_THROWS_AS(grow_manifold(saddle, ManifoldDirection::stable, BranchSide::negative, params,
                                  1e-4, 20.0, 0.0),
                    std::invalid_argument);
    // a huge seed with a tiny spacing bound cannot be refined within the
    // depth budget
    CHECK_THROWS_AS(grow_manifold(saddle, ManifoldDirection::stable, BranchSide::negative, params,
                                  2.0, 20.0, 1e-12),
                    StepCollapse);
}

TEST_CASE("stable branch lands on the origin") {
    const CouplingParams params(0.1);
    const auto saddle = fixed_point(FixedPointFamily::p2, 0, 0, params);
    const ManifoldBranch branch =
        grow_manifold(saddle, ManifoldDirection::stable, BranchSide::negative, params);
    const auto& v = branch.polyline.vertices;
    REQUIRE(v.size() > 100);

    CHECK(std::abs(distance(v.front(), saddle.location) - branch.seed_offset) < 1e-12);
    CHECK(distance(v.back(), PhasePoint{0.0, 0.0}) < 1e-6);

    double max_gap = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        CHECK(v[i].x < v[i - 1].x);  // the branch is a graph over x
        max_gap = std::max(max_gap, distance(v[i - 1], v[i]));
    }
    CHECK(max_gap <= 2.0 * branch.arc_step + 1e-9);

    // every vertex stays in the left quarter diamond
    for (const PhasePoint& p : v) CHECK(inside(left_quarter_slacks(p), 1e-9));
}

TEST_CASE("remaining branches land on the adjacent equilibria") {
    const CouplingParams params(0.1);
    const auto saddle = fixed_point(FixedPointFamily::p2, 0, 0, params);

    const auto stable_pos =
        grow_manifold(saddle, ManifoldDirection::stable, BranchSide::positive, params);
    CHECK(distance(stable_pos.polyline.vertices.back(), PhasePoint{two_pi, 0.0}) < 1e-6);

    const auto unstable_pos =
        grow_manifold(saddle, ManifoldDirection::unstable, BranchSide::positive, params);
    CHECK(distance(unstable_pos.polyline.vertices.back(), PhasePoint{pi, pi}) < 1e-6);

    const auto unstable_neg =
        grow_manifold(saddle, ManifoldDirection::unstable, BranchSide::negative, params);
    CHECK(distance(unstable_neg.polyline.vertices.back(), PhasePoint{pi, -pi}) < 1e-6);
}

TEST_CASE("separatrix graph across the square") {
    const CouplingParams params(0.1);
    const SeparatrixCurve sep = build_separatrix(params);

    CHECK(sep.saddle == PhasePoint{pi, 0.0});
    const auto& eta = sep.eta.vertices;
    REQUIRE(eta.size() > 200);
    CHECK(distance(eta.front(), PhasePoint{0.0, 0.0}) < 1e-6);
    CHECK(distance(eta.back(), PhasePoint{two_pi, 0.0}) < 1e-6);
    for (std::size_t i = 1; i < eta.size(); ++i) CHECK(eta[i].x > eta[i - 1].x);

    CHECK(std::abs(sep.height_at(pi)) < 1e-12);
    CHECK(sep.height_at(0.0) == eta.front().y);
    CHECK(sep.height_at(-5.0) == eta.front().y);   // clamped below
    CHECK(sep.height_at(100.0) == eta.back().y);   // clamped above
    CHECK(sep.height_at(pi / 2.0) < 0.0);
    CHECK(sep.height_at(3.0 * pi / 2.0) > 0.0);

    // the right half is the half-turn image of the left half
    for (double t : {0.4, 1.0, 1.9, 2.6})
        CHECK(std::abs(sep.height_at(two_pi - t) + sep.height_at(t)) < 1e-9);
}

TEST_CASE("region classification against the separatrix") {
    const CouplingParams params(0.1);
    const SeparatrixCurve sep = build_separatrix(params);

    const double x0 = 2.0;
    const double h = sep.height_at(x0);
    const InvariantSquare s{1, 0};
    REQUIRE(square_membership({x0, h + 0.1}, s) == RegionMembership::interior);
    REQUIRE(square_membership({x0, h - 0.1}, s) == RegionMembership::interior);

    CHECK(classify_region({x0, h + 0.1}, sep) == SeparatrixRegion::s10_plus);
    CHECK(classify_region({x0, h - 0.1}, sep) == SeparatrixRegion::s10_minus);
    CHECK(classify_region({x0, h}, sep) == SeparatrixRegion::on_separatrix);
    CHECK(classify_region({x0, h + 0.5e-9}, sep) == SeparatrixRegion::on_separatrix);
    CHECK(classify_region({x0, h + 1e-8}, sep) == SeparatrixRegion::s10_plus);
    CHECK(classify_region({x0, h + 1e-8}, sep, 1e-7) == SeparatrixRegion::on_separatrix);
    CHECK(classify_region({-0.1, 0.0}, sep) == SeparatrixRegion::outside_s10);
    CHECK(classify_region({pi, pi + 0.1}, sep) == SeparatrixRegion::outside_s10);
}

TEST_CASE("rotated left branch matches the independently grown right branch") {
    const CouplingParams params(0.1);
    const auto saddle = fixed_point(FixedPointFamily::p2, 0, 0, params);
    const auto left =
        grow_manifold(saddle, ManifoldDirection::stable, BranchSide::negative, params);
    const auto right =
        grow_manifold(saddle, ManifoldDirection::stable, BranchSide::positive, params);

    Curve2D rotated{CurveTag::manifold, {}};
    for (const PhasePoint& p : left.polyline.vertices)
        rotated.vertices.push_back(s10_internal_rotation(p));

    CHECK(polyline_hausdorff(rotated, right.polyline) < 1e-6);
}

TEST_CASE("polyline distance") {
    const Curve2D a{CurveTag::boundary, {{0.0, 0.0}, {1.0, 0.0}}};
    const Curve2D b{CurveTag::boundary, {{0.0, 0.5}, {1.0, 0.5}}};
    CHECK(std::abs(polyline_hausdorff(a, b) - 0.5) < 1e-15);

    const Curve2D c{CurveTag::boundary, {{0.0, 0.0}, {2.0, 0.0}}};
    const Curve2D d{CurveTag::boundary, {{0.0, 0.0}, {1.0, 0.75}, {2.0, 0.0}}};
    CHECK(std::abs(polyline_hausdorff(c, d) - 0.75) < 1e-15);
    const Curve2D d_reversed{CurveTag::boundary, {{2.0, 0.0}, {1.0, 0.75}, {0.0, 0.0}}};
    CHECK(std::abs(polyline_hausdorff(c, d_reversed) - 0.75) < 1e-15);

    const Curve2D point{CurveTag::boundary, {{0.0, 0.0}}};
    const Curve2D other{CurveTag::boundary, {{3.0, 4.0}}};
    CHECK(std::abs(polyline_hausdorff(point, other) - 5.0) < 1e-15);

    const Curve2D bent{CurveTag::boundary, {{0.0, 0.0}, {1.0, 0.0}, {0.5, 1.0}}};
    const Curve2D probe{CurveTag::boundary, {{0.5, 0.25}}};
    CHECK(std::abs(polyline_hausdorff(bent, probe) - 0.75) < 1e-12);

    CHECK_THROWS_AS(polyline_hausdorff({CurveTag::boundary, {}}, a), std::invalid_argument);
}

TEST_CASE("edge images fall into the adjacent quarter diamonds") {
    const CouplingParams params(0.14);
    const double a = params.a();
    for (int i = 1; i < 300; ++i) {
        const double x = pi / 2.0 + (pi / 2.0) * double(i) / 300.0;

        // upper edge of the left quarter: crosses into the top quarter with
        // margin 6 a sin x on the shared line
        const PhasePoint q1 = apply_line_map({x, pi - x}, params);
        CHECK(inside(top_quarter_slacks(q1), 1e-12));
        CHECK(std::abs(top_quarter_slacks(q1)[0] - 6.0 * a * std::sin(x)) < 1e-12);

        // lower edge: crosses into the bottom quarter with margin 2 a sin x
        const PhasePoint q2 = apply_line_map({x, x - pi}, params);
        CHECK(inside(bottom_quarter_slacks(q2), 1e-12));
        CHECK(std::abs(bottom_quarter_slacks(q2)[0] - 2.0 * a * std::sin(x)) < 1e-12);
    }
}

TEST_CASE("orbits leave the left quarter on the side they started") {
    const CouplingParams params(0.1);
    const SeparatrixCurve sep = build_separatrix(params);

    for (double x0 : {1.2, 1.8, 2.4, 2.8}) {
        for (double offset : {0.05, -0.05}) {
            PhasePoint p{x0, sep.height_at(x0) + offset};
            REQUIRE(inside(left_quarter_slacks(p), 0.0));
            int steps = 0;
            while (inside(left_quarter_slacks(p), 1e-12) && steps < 2000) {
                p = apply_line_map(p, params);
                ++steps;
            }
            REQUIRE(steps < 2000);
            if (offset > 0.0)
                CHECK(inside(top_quarter_slacks(p), 1e-9));
            else
                CHECK(inside(bottom_quarter_slacks(p), 1e-9));
        }
    }
}
