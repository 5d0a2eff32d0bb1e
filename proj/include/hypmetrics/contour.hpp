#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <hypmetrics/errors.hpp>
#include <hypmetrics/geometry.hpp>
#include <hypmetrics/metrics.hpp>
#include <hypmetrics/solvers.hpp>
#include <hypmetrics/verify.hpp>

namespace hypmetrics {

/// One stitched level-set component of y -> m(center, y) in the plane.
/// Closed polylines repeat their first vertex at the end. Open polylines
/// occur when the level set leaves the sampling window or runs into cells
/// masked off at the domain boundary.
struct ContourPolyline {
    double level = 0.0;
    MetricKind metric = MetricKind::CTilde;
    Point center;
    std::vector<std::array<double, 2>> vertices;
    bool closed = false;
};

namespace detail {

inline void require_contour_level(MetricKind metric, double level) {
    double sup = std::numeric_limits<double>::infinity();
    switch (metric) {
        case MetricKind::CTilde: sup = 2.0; break;
        case MetricKind::S:
        case MetricKind::JStar:
        case MetricKind::ThRhoHalf: sup = 1.0; break;
        case MetricKind::J:
        case MetricKind::Rho: break;
    }
    if (!(level > 0.0) || !(level < sup))
        throw ConfigError("contour level out of range for " + std::string(to_string(metric)));
}

struct Window {
    double x0, x1, y0, y1;
};

/// Exponential march from the center along 8 rays until the metric reaches
/// the level or the ray leaves the domain; the reached extents bound the
/// level set. An extent capped at 100*(1+|center|) means the sublevel set is
/// (numerically) unbounded in that direction and the contour will be clipped.
inline Window probe_window(const Domain& g, MetricKind metric, const Point& center, double level,
                           const SolverConfig& cfg) {
    const double cap = 100.0 * (1.0 + norm(center));
    double best = 0.0;
    for (int k = 0; k < 8; ++k) {
        const double a = 0.25 * 3.14159265358979323846 * k;
        const Point u{std::cos(a), std::sin(a)};
        double extent = 0.0;
        for (double t = 0.01 * (1.0 + norm(center)); t <= cap; t *= 2.0) {
            const Point p = center + t * u;
            if (!contains(g, p) || boundary_distance(g, p) < 1e-13) break;
            extent = t;
            if (metric_value(metric, g, center, p, cfg) >= level) break;
        }
        best = std::max(best, extent);
    }
    const double w = 1.1 * std::max(best, 1e-6);
    Window win{center[0] - w, center[0] + w, center[1] - w, center[1] + w};
    if (g.kind() == DomainKind::HalfSpace) win.y0 = std::max(win.y0, 0.0);
    return win;
}

inline Window contour_window(const Domain& g, MetricKind metric, const Point& center, double level,
                             const SolverConfig& cfg) {
    if (g.kind() == DomainKind::UnitBall) return {-1.0, 1.0, -1.0, 1.0};
    if (g.kind() == DomainKind::HalfSpace &&
        (metric == MetricKind::Rho || metric == MetricKind::ThRhoHalf)) {
        // The rho-ball is a Euclidean disk: center (c1, c2*cosh R), radius
        // c2*sinh R. Window framed inside the half-plane so the contour
        // closes.
        const double R = metric == MetricKind::Rho ? level : 2.0 * std::atanh(level);
        const double yc = center[1] * std::cosh(R);
        const double re = center[1] * std::sinh(R);
        Window win{center[0] - 1.2 * re, center[0] + 1.2 * re, yc - 1.2 * re, yc + 1.2 * re};
        win.y0 = std::max(win.y0, 0.4 * center[1] * std::exp(-R));
        return win;
    }
    return probe_window(g, metric, center, level, cfg);
}

} // namespace detail

/// Samples y -> m(center, y) on a (grid_n+1)^2 grid over a window adapted to
/// the domain and level, masks nodes outside the domain or within 1e-13 of
/// its boundary, and extracts the level set by marching squares with linear
/// interpolation. Plane domains only. Deterministic: identical inputs give
/// identical polylines.
inline std::vector<ContourPolyline> metric_ball_contour(const Domain& g, MetricKind metric,
                                                        const Point& center, double level,
                                                        int grid_n,
                                                        const SolverConfig& cfg = {}) {
    if (g.dim() != 2) throw ConfigError("contours are computed in the plane only");
    detail::require_contour_level(metric, level);
    if (grid_n < 8) throw ConfigError("contour grid must have at least 8 cells per side");
    hypmetrics::detail::require_interior(g, center);
    if (metric == MetricKind::Rho || metric == MetricKind::ThRhoHalf)
        if (g.kind() != DomainKind::HalfSpace && g.kind() != DomainKind::UnitBall)
            throw DomainError("rho contours require the half-space or the ball");

    const detail::Window win = detail::contour_window(g, metric, center, level, cfg);
    const int nn = grid_n + 1;
    const double dx = (win.x1 - win.x0) / grid_n;
    const double dy = (win.y1 - win.y0) / grid_n;
    std::vector<double> value(static_cast<std::size_t>(nn) * nn, 0.0);
    std::vector<char> masked(static_cast<std::size_t>(nn) * nn, 0);
    auto node_x = [&](int i) { return win.x0 + i * dx; };
    auto node_y = [&](int j) { return win.y0 + j * dy; };
    for (int j = 0; j < nn; ++j)
        for (int i = 0; i < nn; ++i) {
            const Point p{node_x(i), node_y(j)};
            const std::size_t id = static_cast<std::size_t>(j) * nn + i;
            if (!contains(g, p) || boundary_distance(g, p) < 1e-13 || p == center) {
                // The center itself is masked: the metric is 0 there, which
                // is below any valid level, and evaluators reject x == y
                // nowhere but report value 0 with degenerate minimizers.
                masked[id] = p == center ? 0 : 1;
                value[id] = 0.0;
                continue;
            }
            value[id] = metric_value(metric, g, center, p, cfg);
        }

    // Edge ids: horizontal edge (i,j)-(i+1,j) -> 2*(j*nn+i), vertical edge
    // (i,j)-(i,j+1) -> 2*(j*nn+i)+1. Interpolated crossings are shared
    // between the two cells meeting at an edge.
    std::map<std::uint64_t, std::array<double, 2>> crossing;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> segments;
    auto edge_point = [&](int i, int j, bool verticalEdge) -> std::uint64_t {
        const std::uint64_t id =
            2 * (static_cast<std::uint64_t>(j) * nn + static_cast<std::uint64_t>(i)) +
            (verticalEdge ? 1 : 0);
        if (crossing.count(id)) return id;
        const std::size_t a = static_cast<std::size_t>(j) * nn + i;
        const std::size_t b = verticalEdge ? a + nn : a + 1;
        const double va = value[a];
        const double vb = value[b];
        double t = vb == va ? 0.5 : (level - va) / (vb - va);
        t = std::clamp(t, 0.0, 1.0);
        crossing[id] = verticalEdge
                           ? std::array<double, 2>{node_x(i), node_y(j) + t * dy}
                           : std::array<double, 2>{node_x(i) + t * dx, node_y(j)};
        return id;
    };

    for (int j = 0; j < grid_n; ++j)
        for (int i = 0; i < grid_n; ++i) {
            const std::size_t bl = static_cast<std::size_t>(j) * nn + i;
            const std::size_t br = bl + 1;
            const std::size_t tl = bl + nn;
            const std::size_t tr = tl + 1;
            if (masked[bl] || masked[br] || masked[tl] || masked[tr]) continue;
            int caseId = 0;
            if (value[bl] >= level) caseId |= 1;
            if (value[br] >= level) caseId |= 2;
            if (value[tr] >= level) caseId |= 4;
            if (value[tl] >= level) caseId |= 8;
            if (caseId == 0 || caseId == 15) continue;
            const std::uint64_t bottom = edge_point(i, j, false);
            const std::uint64_t top = edge_point(i, j + 1, false);
            const std::uint64_t left = edge_point(i, j, true);
            const std::uint64_t right = edge_point(i + 1, j, true);
            switch (caseId) {
                case 1: case 14: segments.emplace_back(left, bottom); break;
                case 2: case 13: segments.emplace_back(bottom, right); break;
                case 3: case 12: segments.emplace_back(left, right); break;
                case 4: case 11: segments.emplace_back(right, top); break;
                case 6: case 9: segments.emplace_back(bottom, top); break;
                case 7: case 8: segments.emplace_back(top, left); break;
                case 5: case 10: {
                    // Saddle: disambiguate with the cell-center average.
                    const double avg = 0.25 * (value[bl] + value[br] + value[tl] + value[tr]);
                    const bool joinedToBL = (caseId == 5) == (avg >= level);
                    if (joinedToBL) {
                        segments.emplace_back(left, top);
                        segments.emplace_back(bottom, right);
                    } else {
                        segments.emplace_back(left, bottom);
                        segments.emplace_back(right, top);
                    }
                    break;
                }
                default: break;
            }
        }

    // Stitch segments into chains. Each edge id carries at most two
    // segments; degree-1 edges start open chains, the rest form loops.
    std::map<std::uint64_t, std::vector<std::size_t>> at_edge;
    for (std::size_t s = 0; s < segments.size(); ++s) {
        at_edge[segments[s].first].push_back(s);
        at_edge[segments[s].second].push_back(s);
    }
    std::vector<char> used(segments.size(), 0);
    std::vector<ContourPolyline> out;
    auto walk = [&](std::uint64_t start, bool closed) {
        ContourPolyline line;
        line.level = level;
        line.metric = metric;
        line.center = center;
        line.closed = closed;
        std::uint64_t cur = start;
        line.vertices.push_back(crossing.at(cur));
        while (true) {
            std::size_t next = segments.size();
            for (std::size_t s : at_edge[cur])
                if (!used[s]) {
                    next = s;
                    break;
                }
            if (next == segments.size()) break;
            used[next] = 1;
            cur = segments[next].first == cur ? segments[next].second : segments[next].first;
            line.vertices.push_back(crossing.at(cur));
        }
        out.push_back(std::move(line));
    };
    for (const auto& [edge, segs] : at_edge)
        if (segs.size() == 1 && !used[segs.front()]) walk(edge, false);
    for (const auto& [edge, segs] : at_edge)
        for (std::size_t s : segs)
            if (!used[s]) walk(edge, true);
    return out;
}

} // namespace hypmetrics
