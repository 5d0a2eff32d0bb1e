#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <hypmetrics/errors.hpp>
#include <hypmetrics/geometry.hpp>
#include <hypmetrics/metrics.hpp>
#include <hypmetrics/solvers.hpp>

namespace hypmetrics {

/// Grid sizes for the brute-force referees. window <= 0 means automatic:
/// 10 * max(|x|, |y|, 1), wide enough because the optimum lies within the
/// convex hull of the projections.
struct OracleConfig {
    int coarse_n = 20001;  ///< grid points along the 1-D boundary parameterization
    bool refine = true;    ///< golden-section refinement after the coarse scan
    double window = 0.0;   ///< half-width of the naive half-space scan
};

namespace detail {

inline SolverConfig solver_from(const OracleConfig& cfg) {
    if (cfg.coarse_n < 101) throw ConfigError("oracle coarse_n must be at least 101");
    SolverConfig s;
    s.grid_n = cfg.coarse_n - 1;
    s.refine_rounds = cfg.refine ? 60 : 0;
    return s;
}

inline double auto_window(const Point& x, const Point& y, const OracleConfig& cfg) {
    if (cfg.window > 0.0) return cfg.window;
    return 10.0 * std::max({norm(x), norm(y), 1.0});
}

} // namespace detail

/// Brute-force c~ using the 1-D reduction of the boundary infimum: the
/// segment [x', y'] in the half-space, the shorter great-circle arc between
/// x/|x| and y/|y| in the ball, the single point 0 in the punctured space.
/// Objectives are scanned as squared distances; one sqrt at the end.
inline double ctilde_oracle_reduced(const Domain& g, const Point& x, const Point& y,
                                    const OracleConfig& cfg = {}) {
    require_same_dim(x, y);
    require_same_dim(g, x);
    if (!contains(g, x) || !contains(g, y)) throw DomainError("oracle points must be interior");
    const SolverConfig scfg = detail::solver_from(cfg);
    const double r = distance(x, y);
    if (r == 0.0) return 0.0;
    switch (g.kind()) {
        case DomainKind::HalfSpace: {
            const int n = x.dim();
            double d2 = 0.0;
            for (int i = 0; i + 1 < n; ++i) d2 += (x[i] - y[i]) * (x[i] - y[i]);
            const double xn2 = x[n - 1] * x[n - 1];
            const double yn2 = y[n - 1] * y[n - 1];
            auto worst2 = [&](double t) {
                return std::max(t * t * d2 + xn2, (1.0 - t) * (1.0 - t) * d2 + yn2);
            };
            return r / std::sqrt(grid_refine_min(worst2, 0.0, 1.0, scfg).fx);
        }
        case DomainKind::UnitBall: {
            const double nx = norm(x);
            const double ny = norm(y);
            if (std::min(nx, ny) == 0.0) return r;  // all boundary points equidistant from 0
            const double mu = angle_at_origin(x, y);
            auto worst2 = [&](double k) {
                return std::max(1.0 + nx * nx - 2.0 * nx * std::cos(k),
                                1.0 + ny * ny - 2.0 * ny * std::cos(mu - k));
            };
            return r / std::sqrt(grid_refine_min(worst2, 0.0, mu, scfg).fx);
        }
        case DomainKind::PuncturedSpace:
            return r / std::max(norm(x), norm(y));
        case DomainKind::DiscretizedBoundary: {
            double best = std::numeric_limits<double>::infinity();
            for (const Point& b : g.boundary_points())
                best = std::min(best, std::max(norm_sq(x - b), norm_sq(y - b)));
            return r / std::sqrt(best);
        }
    }
    throw DomainError("unsupported domain");
}

/// Brute-force c~ scanning the FULL 2-D boundary with no reduction: the line
/// segment [-w, w] x {0} or the whole unit circle. Exists to validate the
/// reduction itself; n = 2 only.
inline double ctilde_oracle_naive2d(const Domain& g, const Point& x, const Point& y,
                                    const OracleConfig& cfg = {}) {
    require_same_dim(x, y);
    require_same_dim(g, x);
    if (g.dim() != 2) throw DomainError("naive oracle is 2-D only");
    if (!contains(g, x) || !contains(g, y)) throw DomainError("oracle points must be interior");
    const SolverConfig scfg = detail::solver_from(cfg);
    const double r = distance(x, y);
    if (r == 0.0) return 0.0;
    switch (g.kind()) {
        case DomainKind::HalfSpace: {
            const double w = detail::auto_window(x, y, cfg);
            auto worst2 = [&](double t) {
                const double dx0 = x[0] - t;
                const double dy0 = y[0] - t;
                return std::max(dx0 * dx0 + x[1] * x[1], dy0 * dy0 + y[1] * y[1]);
            };
            return r / std::sqrt(grid_refine_min(worst2, -w, w, scfg).fx);
        }
        case DomainKind::UnitBall: {
            const double px = 1.0 + norm_sq(x);
            const double py = 1.0 + norm_sq(y);
            auto worst2 = [&](double th) {
                const double c = std::cos(th);
                const double s = std::sin(th);
                return std::max(px - 2.0 * (x[0] * c + x[1] * s), py - 2.0 * (y[0] * c + y[1] * s));
            };
            constexpr double two_pi = 6.283185307179586;
            return r / std::sqrt(grid_refine_min(worst2, 0.0, two_pi, scfg).fx);
        }
        default:
            throw DomainError("naive oracle covers the half-plane and the disk only");
    }
}

/// Brute-force s: same boundary parameterizations with the objective
/// |x-z| + |z-y|.
inline double s_oracle(const Domain& g, const Point& x, const Point& y,
                       const OracleConfig& cfg = {}) {
    require_same_dim(x, y);
    require_same_dim(g, x);
    if (!contains(g, x) || !contains(g, y)) throw DomainError("oracle points must be interior");
    const SolverConfig scfg = detail::solver_from(cfg);
    const double r = distance(x, y);
    if (r == 0.0) return 0.0;
    switch (g.kind()) {
        case DomainKind::HalfSpace: {
            const int n = x.dim();
            double d2 = 0.0;
            for (int i = 0; i + 1 < n; ++i) d2 += (x[i] - y[i]) * (x[i] - y[i]);
            const double xn2 = x[n - 1] * x[n - 1];
            const double yn2 = y[n - 1] * y[n - 1];
            auto sum = [&](double t) {
                return std::sqrt(t * t * d2 + xn2) + std::sqrt((1.0 - t) * (1.0 - t) * d2 + yn2);
            };
            return r / grid_refine_min(sum, 0.0, 1.0, scfg).fx;
        }
        case DomainKind::UnitBall: {
            const double nx = norm(x);
            const double ny = norm(y);
            if (std::min(nx, ny) == 0.0) return r / (2.0 - std::max(nx, ny));
            const double mu = angle_at_origin(x, y);
            auto sum = [&](double k) {
                return std::sqrt(1.0 + nx * nx - 2.0 * nx * std::cos(k)) +
                       std::sqrt(1.0 + ny * ny - 2.0 * ny * std::cos(mu - k));
            };
            return r / grid_refine_min(sum, 0.0, mu, scfg).fx;
        }
        case DomainKind::PuncturedSpace:
            return r / (norm(x) + norm(y));
        case DomainKind::DiscretizedBoundary: {
            double best = std::numeric_limits<double>::infinity();
            for (const Point& b : g.boundary_points())
                best = std::min(best, distance(x, b) + distance(y, b));
            return r / best;
        }
    }
    throw DomainError("unsupported domain");
}

/// Exact evaluation over an explicit finite boundary set: the defining
/// infimum becomes a minimum, and d_G the nearest-point distance.
inline double discretized_eval(MetricKind metric, const std::vector<Point>& boundary,
                               const Point& x, const Point& y) {
    if (boundary.empty()) throw ConfigError("discretized boundary needs at least one point");
    require_same_dim(x, y);
    for (const Point& b : boundary) {
        require_same_dim(b, x);
        if (b == x || b == y) throw DomainError("a point coincides with a boundary point");
    }
    const double r = distance(x, y);
    switch (metric) {
        case MetricKind::CTilde: {
            if (r == 0.0) return 0.0;
            double best = std::numeric_limits<double>::infinity();
            for (const Point& b : boundary)
                best = std::min(best, std::max(norm_sq(x - b), norm_sq(y - b)));
            if (best == 0.0) throw DomainError("a point coincides with a boundary point");
            return r / std::sqrt(best);
        }
        case MetricKind::S: {
            if (r == 0.0) return 0.0;
            double best = std::numeric_limits<double>::infinity();
            for (const Point& b : boundary) best = std::min(best, distance(x, b) + distance(y, b));
            if (best == 0.0) throw DomainError("a point coincides with a boundary point");
            return r / best;
        }
        case MetricKind::J:
        case MetricKind::JStar: {
            if (r == 0.0) return 0.0;
            double d = std::numeric_limits<double>::infinity();
            for (const Point& b : boundary) d = std::min({d, distance(x, b), distance(y, b)});
            if (d == 0.0) throw DomainError("a point coincides with a boundary point");
            return metric == MetricKind::J ? std::log1p(r / d) : r / (r + 2.0 * d);
        }
        default:
            throw ConfigError("discretized evaluation covers ctilde, s, j, jstar");
    }
}

} // namespace hypmetrics
