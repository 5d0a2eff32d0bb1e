#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <hypmetrics/errors.hpp>

namespace hypmetrics {

/// A point of R^n stored as a dense coordinate vector. Dimension is dynamic
/// but fixed per computation; every operation that mixes two points checks
/// that their dimensions agree.
class Point {
public:
    Point() = default;

    explicit Point(std::vector<double> coords) : c_(std::move(coords)) {}

    Point(std::initializer_list<double> coords) : c_(coords) {}

    static Point zero(int dim) { return Point(std::vector<double>(static_cast<std::size_t>(dim), 0.0)); }

    /// i-th standard unit vector e_i (0-based index) of R^dim.
    static Point unit(int dim, int i) {
        Point p = zero(dim);
        p.c_[static_cast<std::size_t>(i)] = 1.0;
        return p;
    }

    int dim() const { return static_cast<int>(c_.size()); }

    double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

    const std::vector<double>& coords() const { return c_; }

    double last() const { return c_.back(); }

    bool finite() const {
        for (double v : c_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    friend Point operator+(const Point& a, const Point& b) {
        Point r = a;
        for (int i = 0; i < a.dim(); ++i) r.c_[static_cast<std::size_t>(i)] += b[i];
        return r;
    }

    friend Point operator-(const Point& a, const Point& b) {
        Point r = a;
        for (int i = 0; i < a.dim(); ++i) r.c_[static_cast<std::size_t>(i)] -= b[i];
        return r;
    }

    friend Point operator*(double s, const Point& a) {
        Point r = a;
        for (double& v : r.c_) v *= s;
        return r;
    }

    friend bool operator==(const Point& a, const Point& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

    /// Lexicographic order on coordinates; used to pick a canonical argument
    /// order so that symmetric metrics evaluate bit-identically under swap.
    friend bool operator<(const Point& a, const Point& b) { return a.c_ < b.c_; }

private:
    std::vector<double> c_;
};

inline double dot(const Point& a, const Point& b) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm_sq(const Point& a) { return dot(a, a); }

inline double norm(const Point& a) { return std::sqrt(norm_sq(a)); }

inline double distance(const Point& a, const Point& b) { return norm(a - b); }

inline void require_same_dim(const Point& a, const Point& b) {
    if (a.dim() != b.dim())
        throw DimensionError("point dimensions differ: " + std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()));
}

/// The domain kinds with known boundary structure. DiscretizedBoundary is the
/// oracle-only fallback where the boundary is an explicit finite point set.
enum class DomainKind { HalfSpace, UnitBall, PuncturedSpace, DiscretizedBoundary };

inline const char* to_string(DomainKind k) {
    switch (k) {
        case DomainKind::HalfSpace: return "half_space";
        case DomainKind::UnitBall: return "unit_ball";
        case DomainKind::PuncturedSpace: return "punctured_space";
        case DomainKind::DiscretizedBoundary: return "discretized_boundary";
    }
    return "?";
}

/// A proper subdomain of R^n together with the convexity flag the comparison
/// inequalities depend on. Convexity is intrinsic for the canonical kinds:
/// the half-space and the unit ball are convex, the punctured space is not.
class Domain {
public:
    static Domain half_space(int dim) { return Domain(DomainKind::HalfSpace, dim, true, {}); }

    static Domain unit_ball(int dim) { return Domain(DomainKind::UnitBall, dim, true, {}); }

    static Domain punctured_space(int dim) { return Domain(DomainKind::PuncturedSpace, dim, false, {}); }

    /// Domain whose boundary is a finite point set. Convexity cannot be
    /// inferred from the samples, so the caller supplies it (default false).
    static Domain discretized_boundary(std::vector<Point> boundary, bool convex = false) {
        if (boundary.empty()) throw ConfigError("discretized boundary needs at least one point");
        const int d = boundary.front().dim();
        for (const Point& p : boundary)
            if (p.dim() != d) throw DimensionError("boundary points have mixed dimensions");
        return Domain(DomainKind::DiscretizedBoundary, d, convex, std::move(boundary));
    }

    DomainKind kind() const { return kind_; }
    int dim() const { return dim_; }
    bool convex() const { return convex_; }
    const std::vector<Point>& boundary_points() const { return boundary_; }

private:
    Domain(DomainKind k, int dim, bool convex, std::vector<Point> boundary)
        : kind_(k), dim_(dim), convex_(convex), boundary_(std::move(boundary)) {
        if (dim_ < 2) throw ConfigError("domains require dimension >= 2");
    }

    DomainKind kind_;
    int dim_;
    bool convex_;
    std::vector<Point> boundary_;
};

inline void require_same_dim(const Domain& g, const Point& x) {
    if (g.dim() != x.dim())
        throw DimensionError("point dimension " + std::to_string(x.dim()) + " does not match domain dimension " +
                             std::to_string(g.dim()));
}

/// True iff x is an interior point of the domain. Boundary points are not
/// members: the metrics are defined for interior pairs only.
inline bool contains(const Domain& g, const Point& x) {
    require_same_dim(g, x);
    if (!x.finite()) return false;
    switch (g.kind()) {
        case DomainKind::HalfSpace: return x.last() > 0.0;
        case DomainKind::UnitBall: return norm(x) < 1.0;
        case DomainKind::PuncturedSpace:
            // componentwise, not norm_sq(x) > 0: the square of a subnormal
            // coordinate underflows to 0
            for (int i = 0; i < x.dim(); ++i)
                if (x[i] != 0.0) return true;
            return false;
        case DomainKind::DiscretizedBoundary:
            for (const Point& b : g.boundary_points())
                if (b == x) return false;
            return true;
    }
    return false;
}

/// Euclidean distance from an interior point to the domain boundary.
inline double boundary_distance(const Domain& g, const Point& x) {
    if (!contains(g, x)) throw DomainError("point is not interior to the domain");
    switch (g.kind()) {
        case DomainKind::HalfSpace: return x.last();
        case DomainKind::UnitBall: return 1.0 - norm(x);
        case DomainKind::PuncturedSpace: return norm(x);
        case DomainKind::DiscretizedBoundary: {
            double best = std::numeric_limits<double>::infinity();
            for (const Point& b : g.boundary_points()) best = std::min(best, distance(x, b));
            return best;
        }
    }
    return 0.0;
}

/// Which case of a piecewise closed-form evaluation produced the value.
/// ProjectionFoot/EquidistantSegment arise in the half-space,
/// SameRay/CenterPoint/EquidistantArc in the ball, PuncturedDirect in the
/// punctured space.
enum class BranchTag {
    ProjectionFoot,
    EquidistantSegment,
    SameRay,
    CenterPoint,
    EquidistantArc,
    PuncturedDirect,
};

inline const char* to_string(BranchTag t) {
    switch (t) {
        case BranchTag::ProjectionFoot: return "ProjectionFoot";
        case BranchTag::EquidistantSegment: return "EquidistantSegment";
        case BranchTag::SameRay: return "SameRay";
        case BranchTag::CenterPoint: return "CenterPoint";
        case BranchTag::EquidistantArc: return "EquidistantArc";
        case BranchTag::PuncturedDirect: return "PuncturedDirect";
    }
    return "?";
}

/// Result of a closed-form metric evaluation: the value, which branch fired,
/// the boundary point realizing the infimum when one is known, and the root
/// residual when a 1-D solve was involved.
struct EvalReport {
    double value = 0.0;
    BranchTag branch = BranchTag::ProjectionFoot;
    std::optional<Point> minimizer;
    std::optional<double> residual;
};

/// Magnitude of the angle between the vectors from the origin to x and y,
/// in [0, pi]. The cosine is clamped to [-1, 1] before acos: rounding can
/// push the dot-product ratio past 1 by a few ulps.
inline double angle_at_origin(const Point& x, const Point& y) {
    require_same_dim(x, y);
    const double nx = norm(x);
    const double ny = norm(y);
    if (nx == 0.0 || ny == 0.0)
        throw UndefinedAngleError("angle at origin is undefined for the zero vector");
    const double ratio = std::clamp(dot(x, y) / (nx * ny), -1.0, 1.0);
    return std::acos(ratio);
}

} // namespace hypmetrics
