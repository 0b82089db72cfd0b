#include "trisync/manifolds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "trisync/errors.hpp"
#include "trisync/maps.hpp"
#include "trisync/symmetry.hpp"

namespace trisync {

namespace {

constexpr double stagnation_tol = 1e-9;  // head movement per sweep that counts as "landed"
constexpr int seed_count = 32;
constexpr int max_refine_depth = 24;
constexpr std::size_t vertex_budget = 4000000;

PhasePoint unit(PhasePoint v) {
    const double n = norm(v);
    return {v.x / n, v.y / n};
}

double point_segment_distance(PhasePoint p, PhasePoint a, PhasePoint b) {
    const PhasePoint ab = b - a;
    const double len2 = ab.x * ab.x + ab.y * ab.y;
    if (len2 == 0.0) return distance(p, a);
    double t = ((p.x - a.x) * ab.x + (p.y - a.y) * ab.y) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, a + t * ab);
}

bool strictly_x_increasing(const std::vector<PhasePoint>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i].x > v[i - 1].x)) return false;
    return true;
}

// Directed Hausdorff from A's vertices to B's segments. When B is an
// x-monotone graph the nearest segment sits in a narrow x-window around the
// query point, which a binary search plus local scan exploits; otherwise
// fall back to the full scan.
double directed_hausdorff(const std::vector<PhasePoint>& a, const std::vector<PhasePoint>& b) {
    if (b.size() == 1) {
        double worst = 0.0;
        for (const PhasePoint& p : a) worst = std::max(worst, distance(p, b.front()));
        return worst;
    }

    std::vector<PhasePoint> graph = b;
    bool monotone = strictly_x_increasing(graph);
    if (!monotone) {
        std::reverse(graph.begin(), graph.end());
        monotone = strictly_x_increasing(graph);
    }

    double worst = 0.0;
    if (!monotone) {
        for (const PhasePoint& p : a) {
            double best = distance(p, graph.front());
            for (std::size_t i = 1; i < graph.size(); ++i)
                best = std::min(best, point_segment_distance(p, graph[i - 1], graph[i]));
            worst = std::max(worst, best);
        }
        return worst;
    }

    for (const PhasePoint& p : a) {
        auto it = std::lower_bound(graph.begin(), graph.end(), p.x,
                                   [](const PhasePoint& v, double x) { return v.x < x; });
        std::size_t pivot = std::size_t(it - graph.begin());
        if (pivot == graph.size()) --pivot;
        double best = distance(p, graph[pivot]);
        // expand left and right until the x-gap alone exceeds the best distance
        for (std::size_t i = pivot; i-- > 0;) {
            if (graph[i + 1].x < p.x - best) break;
            best = std::min(best, point_segment_distance(p, graph[i], graph[i + 1]));
        }
        for (std::size_t i = pivot; i + 1 < graph.size(); ++i) {
            if (graph[i].x > p.x + best) break;
            best = std::min(best, point_segment_distance(p, graph[i], graph[i + 1]));
        }
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

ManifoldBranch grow_manifold(const FixedPointInfo& saddle, ManifoldDirection direction,
                             BranchSide side, const CouplingParams& params, double seed_offset,
                             double max_arclength, double arc_step) {
    if (!(seed_offset > 0.0) || !(max_arclength > 0.0) || !(arc_step > 0.0))
        throw std::invalid_argument("grow_manifold: offsets and step bounds must be positive");
    if (saddle.stability != StabilityClass::saddle)
        throw NotASaddle("grow_manifold: fixed point has no one-dimensional stable/unstable pair");

    const double m0 = std::abs(saddle.eigenvalues[0]);
    const double m1 = std::abs(saddle.eigenvalues[1]);
    if (!((m0 > 1.0 && m1 < 1.0) || (m0 < 1.0 && m1 > 1.0)))
        throw NotASaddle("grow_manifold: eigenvalue moduli do not straddle 1");

    const int unstable_index = m0 > 1.0 ? 0 : 1;
    const int index = direction == ManifoldDirection::unstable ? unstable_index : 1 - unstable_index;
    const double eigenvalue = saddle.eigenvalues[index];

    // Expansion factor of the growth map along the branch; stable branches
    // grow under the inverse map, which turns contraction into expansion.
    const double mu =
        direction == ManifoldDirection::unstable ? std::abs(eigenvalue) : 1.0 / std::abs(eigenvalue);

    auto step_map = [&](PhasePoint q) {
        return direction == ManifoldDirection::unstable ? apply_line_map(q, params)
                                                        : apply_line_map_inverse(q, params);
    };

    const double sign = side == BranchSide::positive ? 1.0 : -1.0;
    const PhasePoint e = sign * unit(saddle.eigenvectors[index]);

    // One fundamental domain [seed_offset, mu * seed_offset] along the
    // eigenvector, geometrically spaced so image generations stay evenly
    // covered.
    std::vector<PhasePoint> gen;
    gen.reserve(seed_count + 1);
    for (int i = 0; i <= seed_count; ++i)
        gen.push_back(saddle.location + (seed_offset * std::pow(mu, double(i) / seed_count)) * e);

    ManifoldBranch branch{saddle, direction, side, seed_offset, arc_step,
                          Curve2D{CurveTag::manifold, {}}};
    std::vector<PhasePoint>& out = branch.polyline.vertices;
    out = gen;

    double arclength = branch.polyline.length();

    // Appends with tail decimation: once image spacing has contracted well
    // under arc_step (the branch is spiralling onto its endpoint), keep only
    // every ~0.9 * arc_step of progress so the polyline does not collect
    // thousands of near-coincident vertices.
    PhasePoint last_candidate = out.back();
    auto append = [&](PhasePoint v) {
        const double candidate_gap = distance(v, last_candidate);
        last_candidate = v;
        const double gap = distance(v, out.back());
        if (gap == 0.0) return;
        if (candidate_gap < 0.1 * arc_step && gap < 0.9 * arc_step) return;
        arclength += gap;
        out.push_back(v);
    };

    bool landed = false;
    while (!landed && arclength < max_arclength && out.size() < vertex_budget) {
        std::vector<PhasePoint> next;
        next.reserve(gen.size() + 16);
        next.push_back(step_map(gen.front()));

        std::function<void(PhasePoint, PhasePoint, PhasePoint, PhasePoint, int)> emit =
            [&](PhasePoint pa, PhasePoint qa, PhasePoint pb, PhasePoint qb, int depth) {
                if (distance(qa, qb) <= arc_step) {
                    next.push_back(qb);
                    return;
                }
                if (depth >= max_refine_depth)
                    throw StepCollapse(
                        "grow_manifold: cannot refine image spacing below arc_step; "
                        "seed_offset is too large for this step bound");
                const PhasePoint pm = 0.5 * (pa + pb);
                const PhasePoint qm = step_map(pm);
                emit(pa, qa, pm, qm, depth + 1);
                emit(pm, qm, pb, qb, depth + 1);
            };

        for (std::size_t i = 1; i < gen.size(); ++i)
            emit(gen[i - 1], next.back(), gen[i], step_map(gen[i]), 0);

        landed = distance(next.back(), gen.back()) < stagnation_tol;

        // skip next.front(): it coincides with the previous generation's head
        for (std::size_t i = 1; i < next.size(); ++i) append(next[i]);
        if (landed && !(next.back() == out.back())) {
            arclength += distance(next.back(), out.back());
            out.push_back(next.back());  // keep the landed head exactly
        }
        gen = std::move(next);
    }

    return branch;
}

double SeparatrixCurve::height_at(double x) const {
    const std::vector<PhasePoint>& v = eta.vertices;
    if (x <= v.front().x) return v.front().y;  // clamped below
    if (x >= v.back().x) return v.back().y;    // clamped above
    auto it = std::lower_bound(v.begin(), v.end(), x,
                               [](const PhasePoint& p, double value) { return p.x < value; });
    const PhasePoint b = *it, a = *(it - 1);
    const double t = (x - a.x) / (b.x - a.x);
    return a.y + t * (b.y - a.y);
}

SeparatrixCurve build_separatrix(const CouplingParams& params, double seed_offset,
                                 double arc_step) {
    const FixedPointInfo saddle = fixed_point(FixedPointFamily::p2, 0, 0, params);

    // The stable eigenvector points into x > pi; the negative side descends
    // into the lower-left sector and lands on the origin.
    ManifoldBranch left = grow_manifold(saddle, ManifoldDirection::stable, BranchSide::negative,
                                        params, seed_offset, 4.0 * two_pi, arc_step);

    SeparatrixCurve sep;
    sep.saddle = saddle.location;

    sep.left_branch.tag = CurveTag::manifold;
    sep.left_branch.vertices.assign(left.polyline.vertices.rbegin(), left.polyline.vertices.rend());

    if (distance(sep.left_branch.vertices.front(), PhasePoint{0.0, 0.0}) > 1e-6)
        throw NonConvergence("build_separatrix: stable branch did not land on the origin");

    // The rotation x -> 2 pi - x turns the ascending left branch into a
    // descending run from (2 pi, 0) towards the saddle, matching the contract.
    sep.right_branch.tag = CurveTag::manifold;
    sep.right_branch.vertices.reserve(left.polyline.vertices.size());
    for (const PhasePoint& p : sep.left_branch.vertices)
        sep.right_branch.vertices.push_back(s10_internal_rotation(p));

    sep.eta.tag = CurveTag::manifold;
    sep.eta.vertices = sep.left_branch.vertices;
    sep.eta.vertices.push_back(sep.saddle);
    sep.eta.vertices.insert(sep.eta.vertices.end(), sep.right_branch.vertices.rbegin(),
                            sep.right_branch.vertices.rend());

    if (!strictly_x_increasing(sep.eta.vertices))
        throw GraphValidationFailed("build_separatrix: eta is not a graph over x");
    return sep;
}

SeparatrixRegion classify_region(PhasePoint p, const SeparatrixCurve& separatrix, double tol) {
    const InvariantSquare square{1, 0};
    if (square_membership(p, square) == RegionMembership::outside)
        return SeparatrixRegion::outside_s10;
    const double height = separatrix.height_at(p.x);
    if (std::abs(p.y - height) <= tol) return SeparatrixRegion::on_separatrix;
    return p.y > height ? SeparatrixRegion::s10_plus : SeparatrixRegion::s10_minus;
}

double polyline_hausdorff(const Curve2D& a, const Curve2D& b) {
    if (a.vertices.empty() || b.vertices.empty())
        throw std::invalid_argument("polyline_hausdorff: empty polyline");
    return std::max(directed_hausdorff(a.vertices, b.vertices),
                    directed_hausdorff(b.vertices, a.vertices));
}

}  // namespace trisync
