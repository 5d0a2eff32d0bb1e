#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

#include <hypmetrics/errors.hpp>
#include <hypmetrics/geometry.hpp>
#include <hypmetrics/solvers.hpp>

namespace hypmetrics {

enum class MetricKind { CTilde, S, J, JStar, ThRhoHalf, Rho };

inline const char* to_string(MetricKind k) {
    switch (k) {
        case MetricKind::CTilde: return "ctilde";
        case MetricKind::S: return "s";
        case MetricKind::J: return "j";
        case MetricKind::JStar: return "jstar";
        case MetricKind::ThRhoHalf: return "thrho";
        case MetricKind::Rho: return "rho";
    }
    return "?";
}

namespace detail {

/// Interior points closer to the boundary than this are rejected as
/// numerically boundary: every metric here degenerates as d_G -> 0.
inline constexpr double kBoundaryEps = 1e-14;

/// Angles below this are treated as "same ray"; the affected branches give
/// identical values, so the tolerance only influences the BranchTag.
inline constexpr double kSameRayAngle = 1e-12;

inline void require_interior(const Domain& g, const Point& x) {
    if (!contains(g, x)) throw DomainError("point is not interior to the domain");
    if (g.kind() != DomainKind::DiscretizedBoundary && boundary_distance(g, x) < kBoundaryEps)
        throw DomainError("point is numerically on the boundary");
}

/// Canonical evaluation order: metrics are symmetric, and evaluating on the
/// lexicographically sorted pair makes that symmetry bit-exact.
inline void canonicalize(Point& x, Point& y) {
    if (y < x) std::swap(x, y);
}

/// Orthogonal projection onto the half-space boundary x_n = 0.
inline Point foot(const Point& x) {
    Point z = x;
    z[x.dim() - 1] = 0.0;
    return z;
}

/// Point of the unit sphere at angle k from x (toward y) in the plane of x
/// and y. Used only for minimizer reporting; the evaluated formulas need just
/// the angle. Nearly antipodal directions have no well-conditioned common
/// plane, so an arbitrary orthonormal completion is used there.
inline Point arc_point(const Point& x, const Point& y, double nx, double ny, double mu, double k) {
    const Point xh = (1.0 / nx) * x;
    const Point yh = (1.0 / ny) * y;
    const double smu = std::sin(mu);
    if (smu >= 1e-8) return (std::sin(mu - k) / smu) * xh + (std::sin(k) / smu) * yh;
    int j = 0;
    for (int i = 1; i < x.dim(); ++i)
        if (std::abs(xh[i]) < std::abs(xh[j])) j = i;
    Point u = Point::unit(x.dim(), j) - xh[j] * xh;
    u = (1.0 / norm(u)) * u;
    return std::cos(k) * xh + std::sin(k) * u;
}

inline void require_pair(const Domain& g, const Point& x, const Point& y) {
    require_same_dim(x, y);
    require_interior(g, x);
    require_interior(g, y);
}

} // namespace detail

/// c~ in the upper half-space: branch one when the equidistant boundary point
/// would leave the segment [x', y'] (the infimum is then the foot under the
/// higher point), branch two otherwise.
inline EvalReport ctilde_halfspace(Point x, Point y, [[maybe_unused]] const SolverConfig& cfg = {}) {
    detail::require_pair(Domain::half_space(x.dim() >= 2 ? x.dim() : 2), x, y);
    detail::canonicalize(x, y);
    const int n = x.dim();
    const double xn = x[n - 1];
    const double yn = y[n - 1];
    double d2 = 0.0;  // |x' - y'|^2
    for (int i = 0; i + 1 < n; ++i) d2 += (x[i] - y[i]) * (x[i] - y[i]);
    const double dn = xn - yn;
    const double r2 = d2 + dn * dn;
    EvalReport rep;
    if (d2 <= std::abs(xn * xn - yn * yn)) {
        rep.value = std::sqrt(r2) / std::max(xn, yn);
        rep.branch = BranchTag::ProjectionFoot;
        rep.minimizer = detail::foot(xn >= yn ? x : y);
    } else {
        rep.value = 2.0 * std::sqrt(d2 / (r2 + 4.0 * xn * yn));
        rep.branch = BranchTag::EquidistantSegment;
        const double k = (d2 - xn * xn + yn * yn) / (2.0 * d2);
        rep.minimizer = detail::foot(x) + k * (detail::foot(y) - detail::foot(x));
    }
    rep.value = std::min(rep.value, 2.0);
    return rep;
}

/// c~ in the unit ball. The infimum is attained on the shorter great-circle
/// arc between x/|x| and y/|y|: either at the endpoint under the point of
/// smaller norm, or at the equidistant arc point located by a monotone
/// 1-D root solve.
inline EvalReport ctilde_ball(Point x, Point y, const SolverConfig& cfg = {}) {
    detail::require_pair(Domain::unit_ball(x.dim() >= 2 ? x.dim() : 2), x, y);
    detail::canonicalize(x, y);
    const int n = x.dim();
    const double nx = norm(x);
    const double ny = norm(y);
    EvalReport rep;
    if (x == y) {
        rep.value = 0.0;
        if (nx > 0.0) {
            rep.branch = BranchTag::SameRay;
            rep.minimizer = (1.0 / nx) * x;
        } else {
            rep.branch = BranchTag::CenterPoint;
            rep.minimizer = Point::unit(n, 0);
        }
        return rep;
    }
    const double r = distance(x, y);
    const double lo = std::min(nx, ny);
    const double hi = std::max(nx, ny);
    if (lo == 0.0) {
        // Every boundary point is at distance exactly 1 from the center.
        rep.value = std::min(r, 2.0);
        rep.branch = BranchTag::CenterPoint;
        rep.minimizer = nx > 0.0 ? (1.0 / nx) * x : (1.0 / ny) * y;
        return rep;
    }
    const double cmu = std::clamp(dot(x, y) / (nx * ny), -1.0, 1.0);
    const double mu = std::acos(cmu);
    if (mu < detail::kSameRayAngle || cmu >= (hi * hi - lo * lo + 2.0 * lo) / (2.0 * hi)) {
        rep.value = std::min(r / (1.0 - lo), 2.0);
        rep.branch = BranchTag::SameRay;
        rep.minimizer = nx <= ny ? (1.0 / nx) * x : (1.0 / ny) * y;
        return rep;
    }
    const double half_gap = 0.5 * (nx * nx - ny * ny);
    auto g = [&](double k) { return nx * std::cos(k) - ny * std::cos(mu - k) - half_gap; };
    // The branch test above guarantees g(0) > 0 > g(mu) in exact arithmetic;
    // the endpoint guards absorb the few-ulp disagreements at the seam.
    double khat;
    double resid;
    const double g0 = g(0.0);
    const double gmu = g(mu);
    if (g0 <= 0.0) {
        khat = 0.0;
        resid = g0;
    } else if (gmu >= 0.0) {
        khat = mu;
        resid = gmu;
    } else {
        const RootResult root = bisect_root(g, 0.0, mu, cfg);
        khat = root.x;
        resid = root.fx;
    }
    rep.value = std::min(r / std::sqrt(1.0 + nx * nx - 2.0 * nx * std::cos(khat)), 2.0);
    rep.branch = BranchTag::EquidistantArc;
    rep.residual = std::abs(resid);
    rep.minimizer = detail::arc_point(x, y, nx, ny, mu, khat);
    return rep;
}

/// c~ in R^n minus the origin: the only finite boundary point is 0.
inline EvalReport ctilde_punctured(Point x, Point y) {
    detail::require_pair(Domain::punctured_space(x.dim() >= 2 ? x.dim() : 2), x, y);
    detail::canonicalize(x, y);
    EvalReport rep;
    rep.value = std::min(distance(x, y) / std::max(norm(x), norm(y)), 2.0);
    rep.branch = BranchTag::PuncturedDirect;
    rep.minimizer = Point::zero(x.dim());
    return rep;
}

/// th(rho/2) in the half-space or the ball, via the closed quotient forms.
inline double th_rho_half(const Domain& g, Point x, Point y) {
    detail::require_pair(g, x, y);
    detail::canonicalize(x, y);
    const double r2 = norm_sq(x - y);
    if (r2 == 0.0) return 0.0;
    switch (g.kind()) {
        case DomainKind::HalfSpace:
            return std::sqrt(r2) / std::sqrt(r2 + 4.0 * x.last() * y.last());
        case DomainKind::UnitBall:
            return std::sqrt(r2) / std::sqrt(r2 + (1.0 - norm_sq(x)) * (1.0 - norm_sq(y)));
        default:
            throw DomainError("th(rho/2) is defined only in the half-space and the ball");
    }
}

/// Hyperbolic distance, recovered from th(rho/2).
inline double rho(const Domain& g, const Point& x, const Point& y) {
    return 2.0 * std::atanh(th_rho_half(g, x, y));
}

/// Distance ratio metric j = log(1 + |x-y| / min{d(x), d(y)}).
inline double j_metric(const Domain& g, Point x, Point y) {
    detail::require_pair(g, x, y);
    detail::canonicalize(x, y);
    const double r = distance(x, y);
    if (r == 0.0) return 0.0;
    return std::log1p(r / std::min(boundary_distance(g, x), boundary_distance(g, y)));
}

/// j* = th(j/2) = |x-y| / (|x-y| + 2 min{d(x), d(y)}).
inline double jstar(const Domain& g, Point x, Point y) {
    detail::require_pair(g, x, y);
    detail::canonicalize(x, y);
    const double r = distance(x, y);
    if (r == 0.0) return 0.0;
    return r / (r + 2.0 * std::min(boundary_distance(g, x), boundary_distance(g, y)));
}

/// Triangular ratio metric. Closed form in the half-space (reflection across
/// the boundary) and the punctured space (z = 0); numeric arc minimization in
/// the ball, where no closed form is available.
inline EvalReport s_metric(const Domain& g, Point x, Point y, const SolverConfig& cfg = {}) {
    detail::require_pair(g, x, y);
    detail::canonicalize(x, y);
    const int n = x.dim();
    const double r = distance(x, y);
    EvalReport rep;
    switch (g.kind()) {
        case DomainKind::HalfSpace: {
            const double xn = x[n - 1];
            const double yn = y[n - 1];
            rep.value = r / std::sqrt(r * r + 4.0 * xn * yn);
            // The straight path from x to the reflection of y crosses the
            // boundary at parameter t of the segment [x', y'].
            const double t = xn / (xn + yn);
            const Point fx = detail::foot(x);
            const Point fy = detail::foot(y);
            rep.branch = fx == fy ? BranchTag::ProjectionFoot : BranchTag::EquidistantSegment;
            rep.minimizer = fx + t * (fy - fx);
            break;
        }
        case DomainKind::PuncturedSpace: {
            rep.value = r / (norm(x) + norm(y));
            rep.branch = BranchTag::PuncturedDirect;
            rep.minimizer = Point::zero(n);
            break;
        }
        case DomainKind::UnitBall: {
            const double nx = norm(x);
            const double ny = norm(y);
            if (x == y) {
                rep.value = 0.0;
                if (nx > 0.0) {
                    rep.branch = BranchTag::SameRay;
                    rep.minimizer = (1.0 / nx) * x;
                } else {
                    rep.branch = BranchTag::CenterPoint;
                    rep.minimizer = Point::unit(n, 0);
                }
                return rep;
            }
            if (std::min(nx, ny) == 0.0) {
                // |x - z| = 1 for every boundary z; the sum is minimized on
                // the ray through the other point.
                const double outer = std::max(nx, ny);
                rep.value = r / (2.0 - outer);
                rep.branch = BranchTag::CenterPoint;
                rep.minimizer = nx > 0.0 ? (1.0 / nx) * x : (1.0 / ny) * y;
                break;
            }
            const double cmu = std::clamp(dot(x, y) / (nx * ny), -1.0, 1.0);
            const double mu = std::acos(cmu);
            if (mu < detail::kSameRayAngle) {
                rep.value = r / (2.0 - nx - ny);
                rep.branch = BranchTag::SameRay;
                rep.minimizer = nx >= ny ? (1.0 / nx) * x : (1.0 / ny) * y;
                break;
            }
            auto sum = [&](double k) {
                return std::sqrt(1.0 + nx * nx - 2.0 * nx * std::cos(k)) +
                       std::sqrt(1.0 + ny * ny - 2.0 * ny * std::cos(mu - k));
            };
            const MinResult best = grid_refine_min(sum, 0.0, mu, cfg);
            rep.value = r / best.fx;
            rep.branch = BranchTag::EquidistantArc;
            rep.minimizer = detail::arc_point(x, y, nx, ny, mu, best.x);
            break;
        }
        case DomainKind::DiscretizedBoundary:
            throw DomainError("s on a discretized boundary is computed by the oracle evaluator");
    }
    rep.value = std::min(rep.value, 1.0);
    return rep;
}

} // namespace hypmetrics
