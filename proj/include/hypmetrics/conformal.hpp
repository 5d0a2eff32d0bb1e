#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include <hypmetrics/errors.hpp>
#include <hypmetrics/geometry.hpp>
#include <hypmetrics/metrics.hpp>
#include <hypmetrics/summary.hpp>

namespace hypmetrics {

enum class MapKind { BallHalfSwap, HalfSimilarity, BallRotation, RadialStretch };

inline const char* to_string(MapKind k) {
    switch (k) {
        case MapKind::BallHalfSwap: return "ball_half_swap";
        case MapKind::HalfSimilarity: return "half_similarity";
        case MapKind::BallRotation: return "ball_rotation";
        case MapKind::RadialStretch: return "radial_stretch";
    }
    return "?";
}

/// A concrete map of one of the four supported kinds. Build through the
/// factory functions, which validate the parameters.
struct MapSpec {
    MapKind kind = MapKind::BallHalfSwap;
    int dim = 2;
    double scale = 1.0;                       ///< HalfSimilarity
    Point shift;                              ///< HalfSimilarity, last coordinate 0
    std::vector<std::vector<double>> matrix;  ///< BallRotation, orthogonal
    double exponent = 1.0;                    ///< RadialStretch, in (0, 1]
};

/// The Moebius involution 2(x+e_n)/|x+e_n|^2 - e_n swapping the unit ball
/// and the upper half-space.
inline MapSpec ball_half_swap(int dim) {
    if (dim < 2) throw ConfigError("maps require dimension >= 2");
    MapSpec m;
    m.kind = MapKind::BallHalfSwap;
    m.dim = dim;
    return m;
}

/// x -> scale * x + shift, a conformal self-map of the half-space when the
/// shift is horizontal.
inline MapSpec half_similarity(double scale, Point shift) {
    if (shift.dim() < 2) throw ConfigError("maps require dimension >= 2");
    if (!(scale > 0.0)) throw ConfigError("similarity scale must be positive");
    if (shift.last() != 0.0) throw ConfigError("similarity shift must be horizontal");
    MapSpec m;
    m.kind = MapKind::HalfSimilarity;
    m.dim = shift.dim();
    m.scale = scale;
    m.shift = std::move(shift);
    return m;
}

inline MapSpec ball_rotation(std::vector<std::vector<double>> matrix) {
    const int n = static_cast<int>(matrix.size());
    if (n < 2) throw ConfigError("maps require dimension >= 2");
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != n) throw ConfigError("rotation matrix must be square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double dot_ij = 0.0;
            for (int k = 0; k < n; ++k) dot_ij += matrix[k][i] * matrix[k][j];
            if (std::abs(dot_ij - (i == j ? 1.0 : 0.0)) > 1e-12)
                throw ConfigError("rotation matrix is not orthogonal");
        }
    MapSpec m;
    m.kind = MapKind::BallRotation;
    m.dim = n;
    m.matrix = std::move(matrix);
    return m;
}

/// x -> |x|^(a-1) x, the canonical planar 1/a-quasiconformal map of the ball.
inline MapSpec radial_stretch(int dim, double exponent) {
    if (dim < 2) throw ConfigError("maps require dimension >= 2");
    if (!(exponent > 0.0) || exponent > 1.0) throw ConfigError("stretch exponent must lie in (0, 1]");
    MapSpec m;
    m.kind = MapKind::RadialStretch;
    m.dim = dim;
    m.exponent = exponent;
    return m;
}

/// The domain a map carries the given source onto. BallHalfSwap exchanges
/// the ball and the half-space; the others are self-maps.
inline Domain image_of(const MapSpec& m, const Domain& source) {
    if (source.dim() != m.dim) throw DimensionError("map and domain dimensions differ");
    switch (m.kind) {
        case MapKind::BallHalfSwap:
            if (source.kind() == DomainKind::UnitBall) return Domain::half_space(m.dim);
            if (source.kind() == DomainKind::HalfSpace) return Domain::unit_ball(m.dim);
            throw DomainError("ball-half swap acts on the ball or the half-space");
        case MapKind::HalfSimilarity:
            if (source.kind() != DomainKind::HalfSpace)
                throw DomainError("similarity acts on the half-space");
            return source;
        case MapKind::BallRotation:
        case MapKind::RadialStretch:
            if (source.kind() != DomainKind::UnitBall) throw DomainError("map acts on the ball");
            return source;
    }
    throw DomainError("unsupported map");
}

inline Point apply_map(const MapSpec& m, const Point& x) {
    if (x.dim() != m.dim) throw DimensionError("map and point dimensions differ");
    const int n = m.dim;
    switch (m.kind) {
        case MapKind::BallHalfSwap: {
            if (!(x.last() > 0.0) && !(norm(x) < 1.0))
                throw DomainError("swap input must be interior to the ball or the half-space");
            Point q = x;
            q[n - 1] += 1.0;
            const double q2 = norm_sq(q);
            if (q2 == 0.0) throw PoleError("the swap has a pole at -e_n");
            Point f = (2.0 / q2) * q;
            f[n - 1] -= 1.0;
            return f;
        }
        case MapKind::HalfSimilarity:
            if (!(x.last() > 0.0)) throw DomainError("similarity input must be interior to the half-space");
            return m.scale * x + m.shift;
        case MapKind::BallRotation: {
            if (!(norm(x) < 1.0)) throw DomainError("rotation input must be interior to the ball");
            Point f = Point::zero(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) f[i] += m.matrix[i][j] * x[j];
            return f;
        }
        case MapKind::RadialStretch: {
            const double nx = norm(x);
            if (!(nx < 1.0)) throw DomainError("stretch input must be interior to the ball");
            if (nx == 0.0) return Point::zero(n);
            return std::pow(nx, m.exponent - 1.0) * x;
        }
    }
    throw DomainError("unsupported map");
}

/// Conformal maps of these kinds preserve the hyperbolic metric: records
/// the absolute deviation |th(rho/2) - th(rho'/2)| over the given pairs in
/// ratio_min/ratio_max, flagging pairs beyond tol.
inline RatioSummary check_hyperbolic_invariance(const MapSpec& m, const Domain& source,
                                                const std::vector<std::pair<Point, Point>>& pairs,
                                                double tol = 1e-10) {
    if (m.kind == MapKind::RadialStretch)
        throw ConfigError("the radial stretch is not conformal; invariance does not apply");
    const Domain target = image_of(m, source);
    RatioSummary out;
    for (const auto& [x, y] : pairs) {
        const double before = th_rho_half(source, x, y);
        const double after = th_rho_half(target, apply_map(m, x), apply_map(m, y));
        const double diff = std::abs(before - after);
        out.record(x, y, diff);
        if (diff > tol) out.violations.push_back({x, y, diff, tol, "|th(rho/2) deviation| <= tol"});
    }
    return out;
}

} // namespace hypmetrics
