#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <hypmetrics/conformal.hpp>
#include <hypmetrics/errors.hpp>
#include <hypmetrics/geometry.hpp>
#include <hypmetrics/metrics.hpp>
#include <hypmetrics/oracle.hpp>
#include <hypmetrics/sampling.hpp>
#include <hypmetrics/summary.hpp>

namespace hypmetrics {

/// Sampling plan for a verification run. Identical configs produce
/// bit-identical reports.
struct SampleConfig {
    Domain domain;
    int pair_count = 10000;
    std::uint64_t seed = 0;
    double margin = 1e-9;  ///< minimum boundary clearance of sampled points
    double tol = 1e-12;    ///< absolute slack allowed on the passing side
};

/// Routes a metric evaluation to the closed forms, or to the exact
/// finite-set evaluator for discretized boundaries (which have no closed
/// forms).
inline double metric_value(MetricKind kind, const Domain& g, const Point& x, const Point& y,
                           const SolverConfig& cfg = {}) {
    if (g.kind() == DomainKind::DiscretizedBoundary &&
        (kind == MetricKind::CTilde || kind == MetricKind::S))
        return discretized_eval(kind, g.boundary_points(), x, y);
    switch (kind) {
        case MetricKind::CTilde:
            switch (g.kind()) {
                case DomainKind::HalfSpace: return ctilde_halfspace(x, y, cfg).value;
                case DomainKind::UnitBall: return ctilde_ball(x, y, cfg).value;
                case DomainKind::PuncturedSpace: return ctilde_punctured(x, y).value;
                default: break;
            }
            throw DomainError("unsupported domain for ctilde");
        case MetricKind::S: return s_metric(g, x, y, cfg).value;
        case MetricKind::J: return j_metric(g, x, y);
        case MetricKind::JStar: return jstar(g, x, y);
        case MetricKind::ThRhoHalf: return th_rho_half(g, x, y);
        case MetricKind::Rho: return rho(g, x, y);
    }
    throw ConfigError("unsupported metric kind");
}

namespace detail {

inline std::string format_point(const Point& p) {
    std::ostringstream os;
    os.precision(17);
    os << "(";
    for (int i = 0; i < p.dim(); ++i) os << (i ? ", " : "") << p[i];
    os << ")";
    return os.str();
}

inline std::string format_factor(double f) {
    if (f == 1.0) return "";
    if (f == 2.0) return "2*";
    if (f == 4.0) return "4*";
    std::ostringstream os;
    os.precision(16);
    os << f << "*";
    return os.str();
}

} // namespace detail

/// Proven two-sided bound lo*den <= num <= hi*den for a metric pair in a
/// domain. Convexity tightens the j* bounds.
struct RatioBounds {
    double lo = 1.0;
    double hi = 2.0;
};

inline RatioBounds ratio_bounds(MetricKind num, MetricKind den, const Domain& g) {
    const bool convex = g.convex();
    if (num == MetricKind::CTilde && den == MetricKind::S) return {1.0, 2.0};
    if (num == MetricKind::CTilde && den == MetricKind::JStar)
        return {1.0, convex ? 2.0 * std::sqrt(2.0) : 4.0};
    if (num == MetricKind::S && den == MetricKind::JStar)
        return {1.0, convex ? std::sqrt(2.0) : 2.0};
    if (num == MetricKind::CTilde && den == MetricKind::ThRhoHalf) {
        if (g.kind() != DomainKind::HalfSpace && g.kind() != DomainKind::UnitBall)
            throw ConfigError("th(rho/2) bounds apply in the half-space and the ball only");
        return {1.0, 2.0};
    }
    throw ConfigError("no proven bounds for this metric pair");
}

/// Known extremal configurations for a sweep, mixed into the sample so the
/// empirical ratio range actually reaches the sharp constants instead of
/// creeping toward them.
inline std::vector<std::pair<Point, Point>> adversarial_pairs(MetricKind num, MetricKind den,
                                                              const Domain& g) {
    std::vector<std::pair<Point, Point>> out;
    const int n = g.dim();
    const Point e1 = Point::unit(n, 0);
    const Point en = Point::unit(n, n - 1);
    switch (g.kind()) {
        case DomainKind::PuncturedSpace:
            // z = 0 sits between e1 and -e1; every comparison is extremal here.
            out.emplace_back(e1, -1.0 * e1);
            break;
        case DomainKind::HalfSpace:
            if (num == MetricKind::CTilde && den == MetricKind::S)
                for (double k : {0.001, 0.5, 0.999}) out.emplace_back(en, k * en);  // ratio 1+k
            if (num == MetricKind::CTilde && den == MetricKind::ThRhoHalf) {
                out.emplace_back(en, 0.001 * en);  // vertical: ratio 1.001
                out.emplace_back(en, e1 + en);     // equal height: ratio exactly 2
            }
            break;
        case DomainKind::UnitBall:
            if (num == MetricKind::CTilde && den == MetricKind::ThRhoHalf) {
                out.emplace_back(0.999 * e1, 0.999001 * e1);  // collinear: ratio ~ 1.998
                out.emplace_back(0.001 * e1, 0.002 * e1);     // collinear: ratio ~ 1.001
            }
            if (num == MetricKind::CTilde && den == MetricKind::S && n == 2)
                out.emplace_back(0.5 * e1, 0.5 * Point::unit(n, 1));  // symmetric: ratio 2
            break;
        case DomainKind::DiscretizedBoundary:
            break;
    }
    return out;
}

/// Random-pair ratio sweep with the domain's adversarial pairs (and any
/// caller-supplied extras) mixed in. Pairs where either metric is below
/// 1e-10 are skipped. Bound failures are recorded as violations.
inline RatioSummary sweep_ratio(MetricKind num, MetricKind den, const SampleConfig& cfg,
                                const std::vector<std::pair<Point, Point>>& extra_pairs = {}) {
    if (cfg.pair_count < 1) throw ConfigError("pair_count must be at least 1");
    const RatioBounds bounds = ratio_bounds(num, den, cfg.domain);
    const SolverConfig scfg;
    RatioSummary out;
    const std::string lo_name = detail::format_factor(bounds.lo) + std::string(to_string(den)) +
                                " <= " + to_string(num);
    const std::string hi_name = std::string(to_string(num)) + " <= " +
                                detail::format_factor(bounds.hi) + to_string(den);
    auto measure = [&](const Point& x, const Point& y) {
        const double a = metric_value(num, cfg.domain, x, y, scfg);
        const double b = metric_value(den, cfg.domain, x, y, scfg);
        if (a <= 1e-10 || b <= 1e-10) return;
        out.record(x, y, a / b);
        if (a < bounds.lo * b - cfg.tol) out.violations.push_back({x, y, bounds.lo * b, a, lo_name});
        if (a > bounds.hi * b + cfg.tol) out.violations.push_back({x, y, a, bounds.hi * b, hi_name});
    };
    for (const auto& [x, y] : adversarial_pairs(num, den, cfg.domain)) measure(x, y);
    for (const auto& [x, y] : extra_pairs) measure(x, y);
    int done = 0;
    for (std::uint64_t batch = 0; done < cfg.pair_count; ++batch) {
        Rng rng(batch_seed(cfg.seed, batch));
        const int take = std::min(kSampleBatch, cfg.pair_count - done);
        for (int i = 0; i < take; ++i) {
            const auto [x, y] = sample_pair(cfg.domain, rng, cfg.margin);
            measure(x, y);
        }
        done += take;
    }
    return out;
}

/// Random-triple triangle inequality check: m(x,y) <= m(x,z) + m(z,y) + tol.
inline std::vector<Violation> check_triangle(MetricKind metric, const SampleConfig& cfg) {
    if (cfg.pair_count < 1) throw ConfigError("pair_count must be at least 1");
    const SolverConfig scfg;
    std::vector<Violation> violations;
    int done = 0;
    for (std::uint64_t batch = 0; done < cfg.pair_count; ++batch) {
        Rng rng(batch_seed(cfg.seed, batch));
        const int take = std::min(kSampleBatch, cfg.pair_count - done);
        for (int i = 0; i < take; ++i) {
            const Point x = sample_point(cfg.domain, rng, cfg.margin);
            const Point y = sample_point(cfg.domain, rng, cfg.margin);
            const Point z = sample_point(cfg.domain, rng, cfg.margin);
            const double direct = metric_value(metric, cfg.domain, x, y, scfg);
            const double detour = metric_value(metric, cfg.domain, x, z, scfg) +
                                  metric_value(metric, cfg.domain, z, y, scfg);
            if (direct > detour + cfg.tol)
                violations.push_back(
                    {x, y, direct, detour, "triangle via z = " + detail::format_point(z)});
        }
        done += take;
    }
    return violations;
}

/// Result of a ball-inclusion run. The sup/inf fields are sharpness
/// diagnostics: how close the sampled points push each radius (they are
/// reported, not asserted — at a fixed center the extremes need not be
/// attainable).
struct InclusionReport {
    std::vector<Violation> violations;
    std::size_t sample_count = 0;
    double sup_s_inside = 0.0;  ///< sup{s : ctilde < r}; near r when the outer s-radius is tight
    double inf_s_outside = std::numeric_limits<double>::infinity();  ///< vs r/2
    double sup_rho_inside = 0.0;  ///< sup{rho : ctilde < r}; vs log((1+r)/(1-r))
    double inf_rho_outside = std::numeric_limits<double>::infinity();  ///< vs log((2+r)/(2-r))
};

/// Checks both inclusion chains around a fixed center:
///   B_s(x, r/2) subset B_ctilde(x, r) subset B_s(x, r)
///   B_rho(x, log((2+r)/(2-r))) subset B_ctilde(x, r) subset B_rho(x, log((1+r)/(1-r)))
/// via their sampled implications. The rho chain applies in the half-space
/// and the ball only.
inline InclusionReport check_ball_inclusions(const Point& center, double r,
                                             const SampleConfig& cfg) {
    if (!(r > 0.0) || !(r < 1.0)) throw ConfigError("inclusion radius must lie in (0, 1)");
    if (cfg.pair_count < 1) throw ConfigError("pair_count must be at least 1");
    hypmetrics::detail::require_interior(cfg.domain, center);
    const bool with_rho =
        cfg.domain.kind() == DomainKind::HalfSpace || cfg.domain.kind() == DomainKind::UnitBall;
    const double rho_inner = std::log((2.0 + r) / (2.0 - r));
    const double rho_outer = std::log((1.0 + r) / (1.0 - r));
    const SolverConfig scfg;
    InclusionReport out;
    int done = 0;
    for (std::uint64_t batch = 0; done < cfg.pair_count; ++batch) {
        Rng rng(batch_seed(cfg.seed, batch));
        const int take = std::min(kSampleBatch, cfg.pair_count - done);
        for (int i = 0; i < take; ++i) {
            const Point y = sample_point(cfg.domain, rng, cfg.margin);
            const double s = metric_value(MetricKind::S, cfg.domain, center, y, scfg);
            const double c = metric_value(MetricKind::CTilde, cfg.domain, center, y, scfg);
            ++out.sample_count;
            if (s < 0.5 * r - cfg.tol && c >= r + cfg.tol)
                out.violations.push_back({center, y, s, c, "s < r/2 => ctilde < r"});
            if (c < r - cfg.tol && s >= r + cfg.tol)
                out.violations.push_back({center, y, c, s, "ctilde < r => s < r"});
            if (c < r) out.sup_s_inside = std::max(out.sup_s_inside, s);
            else out.inf_s_outside = std::min(out.inf_s_outside, s);
            if (with_rho) {
                const double p = metric_value(MetricKind::Rho, cfg.domain, center, y, scfg);
                if (p < rho_inner - cfg.tol && c >= r + cfg.tol)
                    out.violations.push_back(
                        {center, y, p, c, "rho < log((2+r)/(2-r)) => ctilde < r"});
                if (c < r - cfg.tol && p >= rho_outer + cfg.tol)
                    out.violations.push_back(
                        {center, y, c, p, "ctilde < r => rho < log((1+r)/(1-r))"});
                if (c < r) out.sup_rho_inside = std::max(out.sup_rho_inside, p);
                else out.inf_rho_outside = std::min(out.inf_rho_outside, p);
            }
        }
        done += take;
    }
    return out;
}

/// Conformal distortion: ctilde in the image domain at the mapped pair is at
/// most twice ctilde at the original pair. Ratio recorded is
/// ctilde(fx, fy) / ctilde(x, y).
inline RatioSummary check_conformal_distortion(const MapSpec& m, const SampleConfig& cfg,
                                               double bound_tol = 1e-9) {
    if (m.kind == MapKind::RadialStretch)
        throw ConfigError("the radial stretch is not conformal; use the quasiregular check");
    const Domain target = image_of(m, cfg.domain);
    const SolverConfig scfg;
    RatioSummary out;
    int done = 0;
    for (std::uint64_t batch = 0; done < cfg.pair_count; ++batch) {
        Rng rng(batch_seed(cfg.seed, batch));
        const int take = std::min(kSampleBatch, cfg.pair_count - done);
        for (int i = 0; i < take; ++i) {
            const auto [x, y] = sample_pair(cfg.domain, rng, cfg.margin);
            const double before = metric_value(MetricKind::CTilde, cfg.domain, x, y, scfg);
            if (before <= 1e-10) continue;
            const double after =
                metric_value(MetricKind::CTilde, target, apply_map(m, x), apply_map(m, y), scfg);
            out.record(x, y, after / before);
            if (after > 2.0 * before + bound_tol)
                out.violations.push_back(
                    {x, y, after, 2.0 * before, "ctilde(fx,fy) <= 2*ctilde(x,y)"});
        }
        done += take;
    }
    return out;
}

/// Quasiregular distortion of the planar radial stretch, exponent a:
/// ctilde(fx, fy) <= 2 * 4^(1-a) * ctilde(x, y)^a. Exact only in n = 2,
/// where the constant lambda_2 = 4 is known. Ratio recorded is
/// ctilde(fx, fy) / (2 * 4^(1-a) * ctilde(x, y)^a).
inline RatioSummary check_quasiregular(double exponent, const SampleConfig& cfg,
                                       double bound_tol = 1e-9) {
    if (cfg.domain.kind() != DomainKind::UnitBall || cfg.domain.dim() != 2)
        throw ConfigError("the quasiregular bound is verified in the planar unit ball only");
    const MapSpec m = radial_stretch(2, exponent);
    const double lead = 2.0 * std::pow(4.0, 1.0 - exponent);
    const SolverConfig scfg;
    RatioSummary out;
    int done = 0;
    for (std::uint64_t batch = 0; done < cfg.pair_count; ++batch) {
        Rng rng(batch_seed(cfg.seed, batch));
        const int take = std::min(kSampleBatch, cfg.pair_count - done);
        for (int i = 0; i < take; ++i) {
            const auto [x, y] = sample_pair(cfg.domain, rng, cfg.margin);
            const double before = metric_value(MetricKind::CTilde, cfg.domain, x, y, scfg);
            if (before <= 1e-10) continue;
            const double after = metric_value(MetricKind::CTilde, cfg.domain, apply_map(m, x),
                                              apply_map(m, y), scfg);
            const double bound = lead * std::pow(before, exponent);
            out.record(x, y, after / bound);
            if (after > bound + bound_tol)
                out.violations.push_back({x, y, after, bound, "ctilde(fx,fy) <= 2*4^(1-a)*ctilde^a"});
        }
        done += take;
    }
    return out;
}

/// Limit families witnessing the sharp constants.
enum class FamilyId { CS_HalfSpace, CJ_Punctured, CTh_Ball_Collinear, CTh_Half_Vertical };

inline const char* to_string(FamilyId id) {
    switch (id) {
        case FamilyId::CS_HalfSpace: return "CS_HalfSpace";
        case FamilyId::CJ_Punctured: return "CJ_Punctured";
        case FamilyId::CTh_Ball_Collinear: return "CTh_Ball_Collinear";
        case FamilyId::CTh_Half_Vertical: return "CTh_Half_Vertical";
    }
    return "?";
}

struct FamilyPoint {
    double parameter;
    double ratio;
};

struct FamilyTrace {
    FamilyId family;
    double claimed_constant;
    std::vector<FamilyPoint> points;
    double final_gap;
};

/// Ratio of the family's two metrics at parameter t (in (0, 1)), computed
/// through the actual evaluators, never through the algebra they are
/// supposed to satisfy:
///   CS_HalfSpace       c/s at x=(0,1), y=(0,t)        -> 1 + t
///   CJ_Punctured       c/j* at (e1, -e1), t unused    -> 4
///   CTh_Ball_Collinear c/th at (u e1, v e1), u=t      -> 2 as t -> 1
///   CTh_Half_Vertical  c/th at x=(0,t), y=(0,1)       -> 1 + t
inline double family_ratio(FamilyId id, double t) {
    if (id != FamilyId::CJ_Punctured && (!(t > 0.0) || !(t < 1.0)))
        throw ConfigError("family parameter must lie in (0, 1)");
    switch (id) {
        case FamilyId::CS_HalfSpace: {
            const Domain g = Domain::half_space(2);
            const Point x{0.0, 1.0};
            const Point y{0.0, t};
            return ctilde_halfspace(x, y).value / s_metric(g, x, y).value;
        }
        case FamilyId::CJ_Punctured: {
            const Domain g = Domain::punctured_space(2);
            const Point x{1.0, 0.0};
            const Point y{-1.0, 0.0};
            return ctilde_punctured(x, y).value / jstar(g, x, y);
        }
        case FamilyId::CTh_Ball_Collinear: {
            // v - u shrinks as (1-u)^2 so that the inner limit v -> u+ is
            // taken faster than u -> 1-; with v - u proportional to 1 - u
            // the ratio would stall below 2.
            const double v = t + std::min(1e-6, (1.0 - t) * (1.0 - t));
            const Domain g = Domain::unit_ball(2);
            const Point x{t, 0.0};
            const Point y{v, 0.0};
            return ctilde_ball(x, y).value / th_rho_half(g, x, y);
        }
        case FamilyId::CTh_Half_Vertical: {
            const Domain g = Domain::half_space(2);
            const Point x{0.0, t};
            const Point y{0.0, 1.0};
            return ctilde_halfspace(x, y).value / th_rho_half(g, x, y);
        }
    }
    throw ConfigError("unsupported family");
}

inline double claimed_constant(FamilyId id) {
    return id == FamilyId::CJ_Punctured ? 4.0 : 2.0;
}

/// Walks the family along parameters 1 - 2^-i, i = 1..steps. steps is capped
/// at 25 so consecutive parameters (and the collinear pair separations) stay
/// resolvable in double precision.
inline FamilyTrace sharpness_family(FamilyId id, int steps) {
    if (steps < 1 || steps > 25) throw ConfigError("steps must lie in [1, 25]");
    FamilyTrace trace;
    trace.family = id;
    trace.claimed_constant = claimed_constant(id);
    for (int i = 1; i <= steps; ++i) {
        const double t = id == FamilyId::CJ_Punctured ? 0.0 : 1.0 - std::pow(2.0, -i);
        trace.points.push_back({t, family_ratio(id, t)});
    }
    trace.final_gap = std::abs(trace.claimed_constant - trace.points.back().ratio);
    return trace;
}

} // namespace hypmetrics
