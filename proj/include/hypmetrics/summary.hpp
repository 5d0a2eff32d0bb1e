#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <hypmetrics/geometry.hpp>

namespace hypmetrics {

/// One failed inequality: the pair it failed on and the two sides as
/// evaluated (the check was lhs <= rhs).
struct Violation {
    Point x;
    Point y;
    double lhs = 0.0;
    double rhs = 0.0;
    std::string what;
};

/// Empirical summary of a tracked statistic over a sample of pairs — a
/// metric ratio for the sweeps, an absolute deviation for the invariance
/// checks — with the witnessing pairs and any bound violations.
struct RatioSummary {
    double ratio_min = std::numeric_limits<double>::infinity();
    double ratio_max = -std::numeric_limits<double>::infinity();
    std::pair<Point, Point> argmin;
    std::pair<Point, Point> argmax;
    std::size_t pair_count = 0;  ///< pairs actually measured (degenerate ones are skipped)
    std::vector<Violation> violations;

    void record(const Point& x, const Point& y, double value) {
        if (value < ratio_min) {
            ratio_min = value;
            argmin = {x, y};
        }
        if (value > ratio_max) {
            ratio_max = value;
            argmax = {x, y};
        }
        ++pair_count;
    }
};

} // namespace hypmetrics
