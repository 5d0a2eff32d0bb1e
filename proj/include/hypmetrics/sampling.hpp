#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <hypmetrics/errors.hpp>
#include <hypmetrics/geometry.hpp>

namespace hypmetrics {

/// Deterministic uniform source. The double conversion is done by hand
/// ((u >> 11) * 2^-53) instead of std::uniform_real_distribution, whose
/// output is implementation-defined — reports must be bit-identical for a
/// given seed on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 engine_;
};

namespace detail {

/// Axis-aligned sampling box per domain kind. Canonical domains use fixed
/// boxes; a discretized boundary uses its bounding box inflated by 1.
inline std::pair<Point, Point> sampling_box(const Domain& g) {
    const int n = g.dim();
    switch (g.kind()) {
        case DomainKind::HalfSpace: {
            Point lo = Point::zero(n);
            Point hi = Point::zero(n);
            for (int i = 0; i < n; ++i) {
                lo[i] = i + 1 == n ? 0.0 : -2.0;
                hi[i] = 2.0;
            }
            return {lo, hi};
        }
        case DomainKind::UnitBall: {
            Point lo = Point::zero(n);
            Point hi = Point::zero(n);
            for (int i = 0; i < n; ++i) {
                lo[i] = -1.0;
                hi[i] = 1.0;
            }
            return {lo, hi};
        }
        case DomainKind::PuncturedSpace: {
            Point lo = Point::zero(n);
            Point hi = Point::zero(n);
            for (int i = 0; i < n; ++i) {
                lo[i] = -2.0;
                hi[i] = 2.0;
            }
            return {lo, hi};
        }
        case DomainKind::DiscretizedBoundary: {
            Point lo = g.boundary_points().front();
            Point hi = lo;
            for (const Point& b : g.boundary_points())
                for (int i = 0; i < n; ++i) {
                    lo[i] = std::min(lo[i], b[i]);
                    hi[i] = std::max(hi[i], b[i]);
                }
            for (int i = 0; i < n; ++i) {
                lo[i] -= 1.0;
                hi[i] += 1.0;
            }
            return {lo, hi};
        }
    }
    throw DomainError("unsupported domain");
}

} // namespace detail

/// One uniform interior point, by rejection: draw from the domain's sampling
/// box until the boundary clearance is at least margin.
inline Point sample_point(const Domain& g, Rng& rng, double margin) {
    if (!(margin > 0.0)) throw ConfigError("sampling margin must be positive");
    const auto [lo, hi] = detail::sampling_box(g);
    const int n = g.dim();
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Point p = Point::zero(n);
        for (int i = 0; i < n; ++i) p[i] = rng.uniform(lo[i], hi[i]);
        if (contains(g, p) && boundary_distance(g, p) >= margin) return p;
    }
    throw NumericsError("rejection sampling failed to find an interior point");
}

inline std::pair<Point, Point> sample_pair(const Domain& g, Rng& rng, double margin) {
    Point x = sample_point(g, rng, margin);
    Point y = sample_point(g, rng, margin);
    return {std::move(x), std::move(y)};
}

/// Batch size for seeding: batch b of a run with seed s draws from an engine
/// seeded with s + b, so batches could be produced concurrently with results
/// independent of scheduling.
inline constexpr int kSampleBatch = 1024;

inline std::uint64_t batch_seed(std::uint64_t seed, std::uint64_t batch_index) {
    return seed + batch_index;
}

} // namespace hypmetrics
