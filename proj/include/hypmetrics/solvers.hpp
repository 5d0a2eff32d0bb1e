#pragma once

#include <cmath>
#include <string>

#include <hypmetrics/errors.hpp>

namespace hypmetrics {

/// Tolerances and iteration budgets for the 1-D solvers. The defaults are
/// tight enough that solver error is negligible next to the verification
/// tolerances used by the test sweeps.
struct SolverConfig {
    double root_tol = 1e-12;  ///< bisection stops when the bracket width falls below this
    int max_iter = 200;       ///< hard cap on bisection iterations
    int grid_n = 4096;        ///< coarse grid cells for minimization
    int refine_rounds = 60;   ///< golden-section rounds inside the winning cell
};

struct RootResult {
    double x;        ///< approximate root
    double fx;       ///< residual at x
    int iterations;  ///< bisection steps taken
};

/// Bisection on [lo, hi] for a continuous f with f(lo) and f(hi) of opposite
/// sign. Exact zeros at either endpoint are accepted as roots. Throws
/// BracketError if the endpoint signs agree (and neither is zero) and
/// ConvergenceError if max_iter steps fail to shrink the bracket to tol.
template <class F>
RootResult bisect_root(F&& f, double lo, double hi, const SolverConfig& cfg = {}) {
    if (!(lo < hi)) throw BracketError("bisection bracket is empty: [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return {lo, 0.0, 0};
    if (fhi == 0.0) return {hi, 0.0, 0};
    if ((flo > 0.0) == (fhi > 0.0))
        throw BracketError("bisection endpoints have the same sign");
    int it = 0;
    while (hi - lo > cfg.root_tol) {
        if (++it > cfg.max_iter) throw ConvergenceError("bisection did not converge within max_iter");
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
        const double fmid = f(mid);
        if (fmid == 0.0) return {mid, 0.0, it};
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    const double x = 0.5 * (lo + hi);
    return {x, f(x), it};
}

struct MinResult {
    double x;    ///< approximate minimizer
    double fx;   ///< value at x
};

/// Global scan of [lo, hi] on a uniform grid of cfg.grid_n cells followed by
/// golden-section refinement over the two cells adjacent to the best node.
/// The returned value never exceeds the best coarse-grid value, so grid
/// resolution only ever improves the answer.
template <class F>
MinResult grid_refine_min(F&& f, double lo, double hi, const SolverConfig& cfg = {}) {
    if (!(lo <= hi)) throw BracketError("minimization interval is empty");
    if (cfg.grid_n < 1) throw ConfigError("grid_n must be positive");
    if (lo == hi) return {lo, f(lo)};

    const int n = cfg.grid_n;
    const double h = (hi - lo) / n;
    int best_i = 0;
    double best_f = f(lo);
    for (int i = 1; i <= n; ++i) {
        const double x = (i == n) ? hi : lo + i * h;
        const double fx = f(x);
        if (fx < best_f) {
            best_f = fx;
            best_i = i;
        }
    }
    double best_x = (best_i == n) ? hi : lo + best_i * h;

    // Refine over the two cells flanking the best node.
    double a = (best_i == 0) ? lo : lo + (best_i - 1) * h;
    double b = (best_i == n) ? hi : lo + (best_i + 1) * h;

    constexpr double inv_phi = 0.6180339887498949;  // 1/golden ratio
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int r = 0; r < cfg.refine_rounds && b - a > 0.0; ++r) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    if (f1 < best_f) {
        best_f = f1;
        best_x = x1;
    }
    if (f2 < best_f) {
        best_f = f2;
        best_x = x2;
    }
    return {best_x, best_f};
}

} // namespace hypmetrics
