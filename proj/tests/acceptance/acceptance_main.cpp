// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Every numeric budget asserted here is pinned; loosening one is a
// behavior change, not a cleanup.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <exception>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <hypmetrics/hypmetrics.hpp>

#include "../support/circle_fit.hpp"

using namespace hypmetrics;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

std::string strf(const char* fmt, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    return buf;
}

void report(int id, bool ok, const std::string& what) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::vector<std::pair<Point, Point>> pairs_of(const Domain& g, int count, std::uint64_t seed,
                                              double margin) {
    std::vector<std::pair<Point, Point>> out;
    out.reserve(count);
    int done = 0;
    for (std::uint64_t batch = 0; done < count; ++batch) {
        Rng rng(batch_seed(seed, batch));
        const int take = std::min(kSampleBatch, count - done);
        for (int i = 0; i < take; ++i) out.push_back(sample_pair(g, rng, margin));
        done += take;
    }
    return out;
}

// 1. Closed forms track the independent oracles on seeded samples.
void criterion1() {
    const auto t0 = Clock::now();
    const std::vector<Domain> domains{Domain::half_space(2), Domain::half_space(3),
                                      Domain::unit_ball(2), Domain::unit_ball(3)};
    double worst_reduced = 0.0;
    double worst_naive = 0.0;
    std::uint64_t seed = 101;
    for (const auto& g : domains) {
        for (const auto& [x, y] : pairs_of(g, 10000, seed, 1e-6)) {
            const double closed = metric_value(MetricKind::CTilde, g, x, y);
            worst_reduced = std::max(worst_reduced, std::abs(closed - ctilde_oracle_reduced(g, x, y)));
            if (g.dim() == 2)
                worst_naive =
                    std::max(worst_naive, std::abs(closed - ctilde_oracle_naive2d(g, x, y)));
        }
        seed += 7;
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool ok = worst_reduced <= 1e-6 && worst_naive <= 1e-5 && secs <= 60.0;
    report(1, ok,
           strf("closed forms track the oracles: max |closed-reduced| %.2e (<= 1e-6), "
                "max |closed-naive| %.2e (<= 1e-5), %.1fs (<= 60s)",
                worst_reduced, worst_naive, secs));
}

// 2. All proven two-sided comparison bounds hold on 1e5 pairs per sweep.
void criterion2() {
    const Domain half2 = Domain::half_space(2);
    const Domain half3 = Domain::half_space(3);
    const Domain ball2 = Domain::unit_ball(2);
    const Domain ball3 = Domain::unit_ball(3);
    const Domain punct = Domain::punctured_space(2);
    const Domain disc = Domain::discretized_boundary({Point{0.0, 0.0}, Point{1.0, 0.0}});

    struct Sweep {
        MetricKind num, den;
        Domain g;
    };
    std::vector<Sweep> sweeps;
    for (const Domain& g : {half2, ball2, punct, disc})
        sweeps.push_back({MetricKind::CTilde, MetricKind::S, g});
    for (const Domain& g : {half2, half3, ball2, ball3, punct, disc}) {
        sweeps.push_back({MetricKind::CTilde, MetricKind::JStar, g});
        sweeps.push_back({MetricKind::S, MetricKind::JStar, g});
    }
    for (const Domain& g : {half2, half3, ball2, ball3})
        sweeps.push_back({MetricKind::CTilde, MetricKind::ThRhoHalf, g});

    std::size_t violations = 0;
    std::string first;
    std::uint64_t seed = 2000;
    for (const auto& s : sweeps) {
        SampleConfig cfg{s.g, 100000, seed++};
        const auto rep = sweep_ratio(s.num, s.den, cfg);
        violations += rep.violations.size();
        if (first.empty() && !rep.violations.empty())
            first = strf(" first: %s/%s in %s (%s)", to_string(s.num), to_string(s.den),
                         to_string(s.g.kind()), rep.violations.front().what.c_str());
    }
    report(2, violations == 0,
           strf("two-sided bounds over %zu sweeps x 1e5 pairs: %zu violations%s", sweeps.size(),
                violations, first.c_str()));
}

// 3. Sharp-constant witnesses at pinned configurations.
void criterion3() {
    const Domain half = Domain::half_space(2);
    const Domain ball = Domain::unit_ball(2);
    const Domain punct = Domain::punctured_space(2);
    bool ok = true;
    double worst = 0.0;
    for (double k : {0.001, 0.5, 0.999}) {
        const Point x{0.0, 1.0};
        const Point y{0.0, k};
        const double dev =
            std::abs(ctilde_halfspace(x, y).value / s_metric(half, x, y).value - (1.0 + k));
        worst = std::max(worst, dev);
        ok = ok && dev <= 1e-12;
    }
    const Point e1{1.0, 0.0};
    const Point me1{-1.0, 0.0};
    const bool exact4 = ctilde_punctured(e1, me1).value / jstar(punct, e1, me1) == 4.0;
    ok = ok && exact4;
    const Point u{0.999, 0.0};
    const Point v{0.999001, 0.0};
    const double collinear = ctilde_ball(u, v).value / th_rho_half(ball, u, v);
    ok = ok && collinear >= 1.998;
    double worst_eq = 0.0;
    const std::vector<std::pair<Point, Point>> level_pairs{
        {Point{0.0, 1.0}, Point{1.0, 1.0}},
        {Point{-2.0, 0.5}, Point{3.0, 0.5}},
        {Point{7.0, 2.0}, Point{7.3, 2.0}}};
    for (const auto& [x, y] : level_pairs)
        worst_eq = std::max(worst_eq,
                            std::abs(ctilde_halfspace(x, y).value - 2.0 * th_rho_half(half, x, y)));
    ok = ok && worst_eq <= 1e-12;
    report(3, ok,
           strf("sharp constants: |ctilde/s-(1+k)| %.1e, ctilde/jstar == 4 %s, collinear "
                "ctilde/th %.6f (>= 1.998), equal-height |ctilde-2th| %.1e",
                worst, exact4 ? "exact" : "NO", collinear, worst_eq));
}

// 4. The arc-branch root solve: tiny residuals, few iterations, and agreement
//    with a 1e6-point scan of the arc objective.
void criterion4() {
    Rng rng(404);
    const int kN = 1000000;
    int done = 0;
    double max_resid = 0.0, max_dev = 0.0;
    int max_iter = 0;
    for (int attempt = 0; done < 10000 && attempt < 2000000; ++attempt) {
        const double a = rng.uniform(0.01, 0.99);
        const double b = rng.uniform(0.01, 0.99);
        const double mu = rng.uniform(0.01, 3.13);
        const Point x{a, 0.0};
        const Point y{b * std::cos(mu), b * std::sin(mu)};
        const auto rep = ctilde_ball(x, y);
        if (rep.branch != BranchTag::EquidistantArc) continue;
        ++done;
        if (rep.residual) max_resid = std::max(max_resid, *rep.residual);

        try {
            const auto rr = bisect_root(
                [&](double k) {
                    return a * std::cos(k) - b * std::cos(mu - k) - 0.5 * (a * a - b * b);
                },
                0.0, mu, SolverConfig{});
            max_iter = std::max(max_iter, rr.iterations);
        } catch (const BracketError&) {
            // root pinned to an endpoint by the branch guards; no iterations
        }

        // The scan objective max(t1, t2) has t1 increasing and t2 decreasing,
        // so its minimum sits where their difference changes sign; binary
        // search locates that grid cell and the refinement stage of the scan
        // runs only there. Identical to scanning all 1e6 points and refining
        // the best cell, at a fraction of the evaluations.
        auto term1 = [&](double k) { return 1.0 + a * a - 2.0 * a * std::cos(k); };
        auto term2 = [&](double k) { return 1.0 + b * b - 2.0 * b * std::cos(mu - k); };
        auto worst = [&](double k) { return std::max(term1(k), term2(k)); };
        const double step = mu / (kN - 1);
        auto diff = [&](int i) { return term1(i * step) - term2(i * step); };
        int pivot = 0;
        if (diff(0) > 0.0) pivot = 0;
        else if (diff(kN - 1) <= 0.0) pivot = kN - 1;
        else {
            int lo = 0, hi = kN - 1;
            while (hi - lo > 1) {
                const int mid = lo + (hi - lo) / 2;
                (diff(mid) <= 0.0 ? lo : hi) = mid;
            }
            pivot = lo;
        }
        const double lo_k = std::max(0, pivot - 2) * step;
        const double hi_k = std::min(kN - 1, pivot + 3) * step;
        const double scan_min = grid_refine_min(worst, lo_k, hi_k, SolverConfig{}).fx;
        const double scan_val = distance(x, y) / std::sqrt(scan_min);
        max_dev = std::max(max_dev, std::abs(rep.value - scan_val));
    }
    const bool ok = done == 10000 && max_resid <= 1e-10 && max_iter <= 60 && max_dev <= 1e-6;
    report(4, ok,
           strf("arc solver on %d triples: residual %.1e (<= 1e-10), iterations %d (<= 60), "
                "|value-scan| %.1e (<= 1e-6)",
                done, max_resid, max_iter, max_dev));
}

// 5. Moebius swap and half-space similarities: involution, hyperbolic
//    invariance, and the factor-2 distortion bound.
void criterion5() {
    const Domain ball2 = Domain::unit_ball(2);
    const Domain half2 = Domain::half_space(2);
    const Domain half3 = Domain::half_space(3);
    const MapSpec swap2 = ball_half_swap(2);
    const MapSpec sim2 = half_similarity(2.0, Point{1.0, 0.0});
    const MapSpec sim3 = half_similarity(0.5, Point{-3.0, 0.0, 0.0});

    double worst_inv = 0.0;
    {
        Rng rng(505);
        for (int i = 0; i < 10000; ++i) {
            const Point x = sample_point(ball2, rng, 1e-4);
            worst_inv = std::max(worst_inv, distance(apply_map(swap2, apply_map(swap2, x)), x));
        }
        for (int i = 0; i < 10000; ++i) {
            const Point x = sample_point(half2, rng, 1e-4);
            worst_inv = std::max(worst_inv, distance(apply_map(swap2, apply_map(swap2, x)), x));
        }
    }

    struct Case {
        MapSpec m;
        Domain g;
        std::uint64_t seed;
    };
    const std::vector<Case> cases{
        {swap2, ball2, 511}, {swap2, half2, 512}, {sim2, half2, 513}, {sim3, half3, 514}};
    double worst_dev = 0.0;
    std::size_t inv_violations = 0;
    std::size_t dist_violations = 0;
    double worst_ratio = 0.0;
    for (const auto& c : cases) {
        const auto inv =
            check_hyperbolic_invariance(c.m, c.g, pairs_of(c.g, 10000, c.seed, 1e-4), 1e-10);
        inv_violations += inv.violations.size();
        worst_dev = std::max(worst_dev, inv.ratio_max);
        SampleConfig cfg{c.g, 10000, c.seed + 100};
        const auto dist = check_conformal_distortion(c.m, cfg);
        dist_violations += dist.violations.size();
        worst_ratio = std::max(worst_ratio, dist.ratio_max);
    }
    const bool ok = worst_inv <= 1e-12 && inv_violations == 0 && dist_violations == 0;
    report(5, ok,
           strf("conformal maps: involution %.1e (<= 1e-12), |th dev| %.1e (<= 1e-10, %zu over), "
                "distortion ratio max %.4f (%zu over 2+tol)",
                worst_inv, worst_dev, inv_violations, worst_ratio, dist_violations));
}

// 6. Quasiregular distortion of the planar radial stretch.
void criterion6() {
    std::size_t violations = 0;
    double worst = 0.0;
    for (double a : {0.5, 0.75}) {
        SampleConfig cfg{Domain::unit_ball(2), 10000, 606};
        const auto rep = check_quasiregular(a, cfg);
        violations += rep.violations.size();
        worst = std::max(worst, rep.ratio_max);
    }
    report(6, violations == 0,
           strf("radial stretch a in {0.5, 0.75}: ctilde(fx,fy) <= 2*4^(1-a)*ctilde^a, "
                "max bound share %.4f, %zu violations",
                worst, violations));
}

// 7. Triangle inequality for ctilde in every domain.
void criterion7() {
    const std::vector<Domain> domains{Domain::half_space(2), Domain::unit_ball(2),
                                      Domain::punctured_space(2),
                                      Domain::discretized_boundary({Point{0.0, 0.0}, Point{1.0, 0.0}})};
    std::size_t violations = 0;
    std::uint64_t seed = 700;
    for (const auto& g : domains) {
        SampleConfig cfg{g, 100000, seed++};
        violations += check_triangle(MetricKind::CTilde, cfg).size();
    }
    report(7, violations == 0,
           strf("triangle inequality: 4 domains x 1e5 triples, %zu violations", violations));
}

// 8. Metric-ball inclusion chains around fixed centers.
void criterion8() {
    struct Config {
        Domain g;
        Point center;
    };
    const std::vector<Config> configs{{Domain::half_space(2), Point{0.0, 1.0}},
                                      {Domain::unit_ball(2), Point{0.3, 0.0}}};
    std::size_t violations = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 800;
    for (const auto& c : configs)
        for (double r : {0.2, 0.5, 0.9}) {
            SampleConfig cfg{c.g, 100000, seed++};
            const auto rep = check_ball_inclusions(c.center, r, cfg);
            violations += rep.violations.size();
            samples += rep.sample_count;
        }
    report(8, violations == 0,
           strf("s- and rho-ball inclusions: 6 configurations, %zu samples, %zu violations",
                samples, violations));
}

// 9. Contour extraction: the rho contour is a circle to grid accuracy, and
//    ctilde contour vertices stay inside the s-ball sandwich.
void criterion9() {
    bool ok = true;

    const double R = 0.8;
    const int grid = 128;
    const auto rho_loops =
        metric_ball_contour(Domain::half_space(2), MetricKind::Rho, Point{0.0, 1.0}, R, grid);
    std::vector<std::array<double, 2>> verts;
    bool closed = !rho_loops.empty();
    for (const auto& l : rho_loops) {
        closed = closed && l.closed;
        verts.insert(verts.end(), l.vertices.begin(), l.vertices.end());
    }
    const double spacing = 2.4 * std::sinh(R) / grid;
    const auto fit = testsupport::fit_circle(verts);
    ok = ok && closed && verts.size() > 50 && fit.max_residual < 2.0 * spacing;

    struct Config {
        Domain g;
        Point center;
        double level;
    };
    const std::vector<Config> configs{{Domain::unit_ball(2), Point{0.3, 0.0}, 0.4},
                                      {Domain::half_space(2), Point{0.0, 1.0}, 0.5}};
    double s_lo = std::numeric_limits<double>::infinity();
    double s_hi = 0.0;
    for (const auto& c : configs) {
        const auto loops = metric_ball_contour(c.g, MetricKind::CTilde, c.center, c.level, 96);
        ok = ok && !loops.empty();
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (const auto& l : loops)
            for (const auto& v : l.vertices) {
                const double s = s_metric(c.g, c.center, Point{v[0], v[1]}).value;
                lo = std::min(lo, s);
                hi = std::max(hi, s);
            }
        ok = ok && lo >= 0.5 * c.level - 0.01 && hi <= c.level + 0.01;
        s_lo = std::min(s_lo, lo / c.level);
        s_hi = std::max(s_hi, hi / c.level);
    }
    report(9, ok,
           strf("contours: rho circle-fit residual %.2e (< %.2e), ctilde contour vertex s/level "
                "in [%.3f, %.3f] (within [1/2-eps, 1+eps])",
                fit.max_residual, 2.0 * spacing, s_lo, s_hi));
}

} // namespace

int main() {
    const auto t0 = Clock::now();
    const std::vector<void (*)()> criteria{criterion1, criterion2, criterion3,
                                           criterion4, criterion5, criterion6,
                                           criterion7, criterion8, criterion9};
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        try {
            criteria[i]();
        } catch (const std::exception& e) {
            report(static_cast<int>(i) + 1, false, strf("exception: %s", e.what()));
        }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("%d/9 criteria passed in %.1fs\n", 9 - g_failures, secs);
    return g_failures == 0 ? 0 : 1;
}
