#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

namespace trisync {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

struct PhasePoint {
    double x{};
    double y{};

    friend PhasePoint operator+(PhasePoint a, PhasePoint b) { return {a.x + b.x, a.y + b.y}; }
    friend PhasePoint operator-(PhasePoint a, PhasePoint b) { return {a.x - b.x, a.y - b.y}; }
    friend PhasePoint operator*(double s, PhasePoint p) { return {s * p.x, s * p.y}; }
    friend PhasePoint operator-(PhasePoint p) { return {-p.x, -p.y}; }
    friend bool operator==(PhasePoint a, PhasePoint b) { return a.x == b.x && a.y == b.y; }
};

inline double sup_norm(PhasePoint p) { return std::max(std::abs(p.x), std::abs(p.y)); }
inline double norm(PhasePoint p) { return std::hypot(p.x, p.y); }
inline double distance(PhasePoint a, PhasePoint b) { return norm(a - b); }

// Componentwise reduction to [-pi, pi); the displacement d seen on the torus.
inline PhasePoint torus_displacement(PhasePoint d) {
    auto reduce = [](double v) {
        double r = std::remainder(v, two_pi);  // (-pi, pi], exact IEEE remainder
        return r == pi ? -pi : r;
    };
    return {reduce(d.x), reduce(d.y)};
}

inline double torus_distance(PhasePoint a, PhasePoint b) { return norm(torus_displacement(a - b)); }

// Row-major 2x2 matrix, enough linear algebra for tangent maps.
struct Mat2 {
    double a00{}, a01{}, a10{}, a11{};

    double det() const { return a00 * a11 - a01 * a10; }
    double trace() const { return a00 + a11; }

    PhasePoint apply(PhasePoint v) const { return {a00 * v.x + a01 * v.y, a10 * v.x + a11 * v.y}; }

    // Cramer solve of M q = rhs. Caller guarantees det != 0.
    PhasePoint solve(PhasePoint rhs) const {
        const double d = det();
        return {(rhs.x * a11 - rhs.y * a01) / d, (a00 * rhs.y - a10 * rhs.x) / d};
    }

    struct RealEigen {
        double lambda1, lambda2;    // lambda1 >= lambda2
        PhasePoint v1, v2;          // unit eigenvectors, v_i belongs to lambda_i
    };

    // Closed-form eigensolve; nullopt when the eigenvalues are complex.
    std::optional<RealEigen> eigen_real() const;
};

struct Window {
    double xmin{}, xmax{}, ymin{}, ymax{};

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    bool degenerate() const {
        return !(xmin < xmax) || !(ymin < ymax) || !std::isfinite(width()) || !std::isfinite(height());
    }
    bool contains(PhasePoint p) const {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }
};

enum class CurveTag {
    nullcline_vertical,    // zero set of the x-component of the perturbation field
    nullcline_horizontal,  // zero set of the y-component
    manifold,
    boundary,
};

struct Curve2D {
    CurveTag tag{CurveTag::manifold};
    std::vector<PhasePoint> vertices;

    double length() const {
        double s = 0.0;
        for (std::size_t i = 1; i < vertices.size(); ++i) s += distance(vertices[i - 1], vertices[i]);
        return s;
    }
};

}  // namespace trisync
